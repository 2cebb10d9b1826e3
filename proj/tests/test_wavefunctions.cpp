#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "qes/errors.hpp"
#include "qes/spectrum.hpp"
#include "qes/wavefunction.hpp"

using namespace qes;

namespace {

WavefunctionGrid sample_root(const ModelInstance& inst, int index, int points = 2001) {
    Pipeline p = run_pipeline(inst);
    Real r = p.roots.precise.at(index);
    return sample_default(inst, assemble_solution(p.chain, r), r, points);
}

}  // namespace

TEST_CASE("Coulomb n=1, beta=1: x^0.5 e^{-x^2/4} (x-1)") {
    auto inst = fx::coulomb(1);
    Pipeline p = run_pipeline(inst);
    Polynomial s = assemble_solution(p.chain, 1);
    WavefunctionGrid g = sample(inst, s, 1, 0.25, 6, 2301);
    CHECK(g.node_count == 1);
    // shape up to normalization
    const double ref0 = std::sqrt(0.25) * std::exp(-0.25 * 0.25 / 4) * (0.25 - 1);
    for (size_t i = 0; i < g.xs.size(); i += 230) {
        double x = g.xs[i];
        double ref = std::sqrt(x) * std::exp(-x * x / 4) * (x - 1);
        CHECK(g.psi[i] / g.psi[0] == doctest::Approx(ref / ref0).epsilon(1e-12));
    }
    CHECK(g.parity == Parity::None);
}

TEST_CASE("normalization and sign") {
    WavefunctionGrid g = sample_root(fx::xie(true), 0);
    double acc = 0;
    for (size_t i = 1; i < g.xs.size(); ++i)
        acc += 0.5 * (g.xs[i] - g.xs[i - 1]) * (g.psi[i] * g.psi[i] + g.psi[i - 1] * g.psi[i - 1]);
    CHECK(acc == doctest::Approx(1).epsilon(1e-12));
    CHECK(g.norm == doctest::Approx(1).epsilon(1e-12));
    CHECK(g.psi[g.xs.size() / 2] > 0);
}

TEST_CASE("parity") {
    WavefunctionGrid g = sample_root(fx::xie(true), 0);
    CHECK(g.parity == Parity::Even);
    CHECK(g.psi[g.xs.size() / 2] != 0);

    g = sample_root(fx::xie(false), 0);
    CHECK(g.parity == Parity::Odd);
    CHECK(g.psi[g.xs.size() / 2] == 0);

    for (int i = 0; i < 6; ++i) CHECK(sample_root(fx::pdshg(0, 1, 5), i).parity == Parity::Odd);
    for (int i = 0; i < 6; ++i) CHECK(sample_root(fx::pdshg(1, 0, 5), i).parity == Parity::Even);

    WavefunctionGrid bad = g;
    bad.xs.back() += 0.5;
    CHECK_THROWS_AS(parity_classify(bad), Error);
}

TEST_CASE("node counts") {
    CHECK(sample_root(fx::dshg(), 0).node_count == 0);
    CHECK(count_nodes({1, 0.5, 0, -0.5, -1}) == 1);
    CHECK(count_nodes({1, 1e-14, -1e-14, 1}) == 0);  // chatter inside the dead band
    CHECK(count_nodes({1, -1, 1, -1}) == 3);

    // A2 models: ascending energy, non-decreasing node count
    for (const auto& inst : {fx::razavy(), fx::dshg()}) {
        SpectrumResult s = solve_spectrum(inst, {true, false});
        for (size_t i = 1; i < s.roots.size(); ++i) CHECK(*s.roots[i].node_count >= *s.roots[i - 1].node_count);
    }
}

TEST_CASE("grid errors") {
    auto inst = fx::coulomb(0);
    Polynomial one = Polynomial::constant(1);
    CHECK_THROWS_AS(sample(inst, one, 0, 1, 2, 2), Error);
    CHECK_THROWS_AS(sample(inst, one, 0, 2, 1, 10), Error);
    CHECK_THROWS_AS(sample_at(inst, one, 0, {0.1, 0.3, 0.2}), Error);
    CHECK_THROWS_AS(sample(inst, one, 0, -1, 1, 11), Error);  // outside x > 0
}

TEST_CASE("default extent reaches the decay") {
    auto inst = fx::chen(false);
    Pipeline p = run_pipeline(inst);
    Real r = p.roots.precise.back();
    GridExtent ext = default_extent(inst, assemble_solution(p.chain, r), r);
    CHECK(ext.xmin == -ext.xmax);
    CHECK(ext.xmax > 10);  // slowly decaying odd state, E ~ -1
    WavefunctionGrid g = sample_root(inst, 7);
    CHECK(std::fabs(g.psi.front()) < 1e-10);
}
