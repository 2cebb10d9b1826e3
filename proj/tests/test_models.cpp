#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "qes/errors.hpp"
#include "qes/models.hpp"

using namespace qes;

TEST_CASE("names round-trip") {
    const ModelId ids[] = {ModelId::XieEven, ModelId::XieOdd, ModelId::ChenEven, ModelId::ChenOdd,
                           ModelId::CoulombMagnetic, ModelId::Razavy, ModelId::Dshg, ModelId::PerturbedDshg};
    for (ModelId id : ids) {
        auto [back, v] = parse_model_name(model_name(id, VariableVariant::Native));
        CHECK(back == id);
    }
    auto [id, v] = parse_model_name("razavy-sinh2");
    CHECK(id == ModelId::Razavy);
    CHECK(v == VariableVariant::SinhSq);
    CHECK(parse_model_name("perturbed-dshg").second == VariableVariant::CoshSq);
    CHECK_THROWS_AS(parse_model_name("harmonic"), Error);
    CHECK(catalog().size() == 10);
}

TEST_CASE("baseline values") {
    CHECK(baseline_value(fx::xie(true)) == 3);
    CHECK(baseline_value(fx::xie(false)) == 2);
    CHECK(baseline_label(ModelId::XieEven) == "sqrt(-E)");
    CHECK(model_M(fx::dshg()) == 12);
    CHECK(model_M(fx::razavy()) == 21);
    CHECK(model_M(fx::pdshg(2, 1)) == 26);
    CHECK_THROWS_AS(model_M(fx::coulomb()), Error);
}

TEST_CASE("ODE coefficient tables") {
    OdeCoefficients o = ode_template(fx::xie(true));
    CHECK(o.a2 == 4);
    CHECK(o.a1 == -4);
    CHECK(o.b0 == -2);

    o = ode_template(fx::dshg());
    CHECK(o.b0 == 4);
    CHECK(o.c1 == doctest::Approx(2 * 2 * 11));

    o = ode_template(fx::razavy());
    CHECK(o.b0 == -2);

    o = ode_coefficients(fx::coulomb(3), 1.25L);
    CHECK(o.c0 == 1.25L);
    CHECK(o.c0_scan == 0);
}

TEST_CASE("closed-form multiplicators") {
    SliceMultiplicators m = multiplicators(fx::xie(true));
    for (int k = 0; k <= 12; ++k) CHECK(m.fm1(k) == -2 * k * (2 * k - 1));

    m = multiplicators(fx::coulomb());
    for (int k = 0; k <= 12; ++k) {
        CHECK(m.f1(k) == 10 - k);
        CHECK(m.fm1(k) == k * (k - 1) + k);
        CHECK(m.f0(k) == 0);
    }
    CHECK(m.f0.sigma == 1);

    auto d = fx::dshg();
    m = multiplicators(d);
    const Real c0n = m.f0(0);
    for (int k = 0; k <= 11; ++k) CHECK(m.f0(k) == doctest::Approx(static_cast<double>(-4 * k * (11 - k) + c0n)));
}

TEST_CASE("normalizability") {
    CHECK(normalizable(fx::xie(true), 0));
    CHECK(normalizable(fx::xie(false), 0));
    // even needs V2 < -44 at n = 10, odd V2 < -46
    CHECK_FALSE(normalizable(fx::xie(true, 10, 1, -44), 0));
    CHECK(normalizable(fx::xie(true, 10, 1, -44.5), 0));
    CHECK_FALSE(normalizable(fx::xie(false, 10, 1, -46), 0));
    CHECK(normalizable(fx::dshg(), 0));
}

TEST_CASE("coordinate map and prefactor") {
    CHECK(coordinate_map(fx::xie(true), 0) == 0);
    CHECK(coordinate_map(fx::razavy(), 0) == 1);
    CHECK(coordinate_map(fx::dshg(), 0) == 1);
    CHECK(ansatz_prefactor(fx::xie(true, 10, 1, -50), 0, 60) == 1);
    CHECK(ansatz_prefactor(fx::xie(false), 0, 60) == 0);
    CHECK(static_cast<double>(ansatz_prefactor(fx::coulomb(), 1, 0)) == doctest::Approx(std::exp(-0.25)).epsilon(1e-15));
}

TEST_CASE("potentials") {
    CHECK(potential(fx::xie(true, 10, 1, -50), 0, 60) == -(1 - 50 + 60));
    CHECK(potential(fx::dshg(), 0, 0) == 100);
    CHECK_THROWS_AS(potential(fx::coulomb(), 0, 1), Error);

    // two minima of the Xie well at +-arcsech sqrt(-V3/(2 V2))
    const Real V3 = 50.6498736146L, V2 = -50;
    const Real xm = std::acosh(1 / std::sqrt(-V3 / (2 * V2)));
    auto inst = fx::xie(true, 10, 1, -50);
    auto V = [&](Real x) { return potential(inst, x, V3); };
    CHECK(V(xm) < V(xm - 0.05L));
    CHECK(V(xm) < V(xm + 0.05L));
    CHECK(V(xm) < V(0));
}

TEST_CASE("double-well flag") {
    auto inst = fx::xie(true);
    CHECK(double_well_flag(inst, 50.6499));
    CHECK_FALSE(double_well_flag(inst, 117.499));
    CHECK(double_well_flag(inst, 99.999));
    CHECK_FALSE(double_well_flag(inst, 100));
    CHECK_THROWS_AS(double_well_flag(fx::dshg(), 1), Error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(fx::xie(true, -1)), Error);
    CHECK_THROWS_AS(validate(fx::make(ModelId::Dshg, DshgParams{-1}, 3)), Error);
    CHECK_THROWS_AS(validate(fx::make(ModelId::Razavy, RazavyParams{0.5, 2, 0}, 3)), Error);
    CHECK_THROWS_AS(validate(fx::make(ModelId::Dshg, DshgParams{2}, 3, VariableVariant::SinhSq)), Error);
    try {
        validate(fx::xie(true, 3, 0, -50));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BaselineUnsolvable);
    }
}
