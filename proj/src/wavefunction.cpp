#include "qes/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qes/errors.hpp"

namespace qes {

namespace {

double trapezoid_norm(const std::vector<double>& xs, const std::vector<double>& f) {
    long double acc = 0;
    for (size_t i = 1; i < xs.size(); ++i)
        acc += 0.5L * (xs[i] - xs[i - 1]) * ((long double)f[i] * f[i] + (long double)f[i - 1] * f[i - 1]);
    return static_cast<double>(std::sqrt(acc));
}

bool symmetric(const std::vector<double>& xs) {
    const size_t n = xs.size();
    if (n < 2) return false;
    const double tol = 1e-9 * std::max(std::fabs(xs.front()), std::fabs(xs.back()));
    for (size_t i = 0; i < n; ++i)
        if (std::fabs(xs[i] + xs[n - 1 - i]) > tol) return false;
    return true;
}

// log of |Q| times the absolute-coefficient polynomial: an upper envelope of
// |psi| with no zeros in it
Real envelope(const ModelInstance& inst, const Polynomial& s, Real x, Real scan_value) {
    SignedLog q = ansatz_log(inst, x, scan_value);
    Real z = coordinate_map(inst, x);
    return q.log_abs + std::log(poly_eval_scale(s, z));
}

}  // namespace

int count_nodes(const std::vector<double>& psi) {
    double peak = 0;
    for (double v : psi) peak = std::max(peak, std::fabs(v));
    const double band = 1e-10 * peak;
    int nodes = 0, last = 0;
    for (double v : psi) {
        if (std::fabs(v) <= band) continue;
        int sg = v > 0 ? 1 : -1;
        if (last != 0 && sg != last) ++nodes;
        last = sg;
    }
    return nodes;
}

Parity parity_classify(const WavefunctionGrid& grid) {
    if (!symmetric(grid.xs)) throw Error(ErrorKind::AsymmetricGrid, "parity needs a grid symmetric about 0");
    const size_t n = grid.psi.size();
    double peak = 0, even_dev = 0, odd_dev = 0;
    for (double v : grid.psi) peak = std::max(peak, std::fabs(v));
    for (size_t i = 0; i < n; ++i) {
        even_dev = std::max(even_dev, std::fabs(grid.psi[i] - grid.psi[n - 1 - i]));
        odd_dev = std::max(odd_dev, std::fabs(grid.psi[i] + grid.psi[n - 1 - i]));
    }
    if (even_dev < 1e-8 * peak) return Parity::Even;
    if (odd_dev < 1e-8 * peak) return Parity::Odd;
    return Parity::None;
}

WavefunctionGrid sample_at(const ModelInstance& inst, const Polynomial& s, Real scan_value, std::vector<double> xs) {
    if (xs.size() < 3) throw Error(ErrorKind::DegenerateGrid, "need at least 3 points");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw Error(ErrorKind::DegenerateGrid, "grid must be strictly increasing");

    const size_t n = xs.size();
    std::vector<Real> logs(n);
    std::vector<int> signs(n);
    Real top = -std::numeric_limits<Real>::infinity();
    for (size_t i = 0; i < n; ++i) {
        SignedLog q = ansatz_log(inst, xs[i], scan_value);
        Real sv = poly_eval(s, coordinate_map(inst, xs[i]));
        signs[i] = sv == 0 ? 0 : q.sign * (sv > 0 ? 1 : -1);
        logs[i] = signs[i] == 0 ? 0 : q.log_abs + std::log(std::fabs(sv));
        if (signs[i] != 0) top = std::max(top, logs[i]);
    }

    WavefunctionGrid g;
    g.xs = std::move(xs);
    g.psi.resize(n);
    for (size_t i = 0; i < n; ++i) g.psi[i] = signs[i] == 0 ? 0.0 : static_cast<double>(signs[i] * std::exp(logs[i] - top));

    double nrm = trapezoid_norm(g.xs, g.psi);
    if (!(nrm > 0)) throw Error(ErrorKind::DegenerateGrid, "wavefunction vanishes on the grid");
    for (double& v : g.psi) v /= nrm;

    // positive at the first noticeable interior extremum
    double peak = 0;
    for (double v : g.psi) peak = std::max(peak, std::fabs(v));
    for (size_t i = 1; i + 1 < n; ++i) {
        double a = std::fabs(g.psi[i]);
        if (a > 1e-6 * peak && a >= std::fabs(g.psi[i - 1]) && a >= std::fabs(g.psi[i + 1])) {
            if (g.psi[i] < 0)
                for (double& v : g.psi) v = -v;
            break;
        }
    }

    g.norm = trapezoid_norm(g.xs, g.psi);
    g.node_count = count_nodes(g.psi);
    g.parity = symmetric(g.xs) ? parity_classify(g) : Parity::None;
    return g;
}

WavefunctionGrid sample(const ModelInstance& inst, const Polynomial& s, Real scan_value, double xmin, double xmax,
                        int points) {
    if (points < 3) throw Error(ErrorKind::DegenerateGrid, "need at least 3 points");
    if (!(xmax > xmin)) throw Error(ErrorKind::DegenerateGrid, "xmin must be below xmax");
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) xs[i] = xmin + (xmax - xmin) * i / (points - 1);
    if (points % 2 == 1 && xmin == -xmax) xs[points / 2] = 0;
    return sample_at(inst, s, scan_value, std::move(xs));
}

GridExtent default_extent(const ModelInstance& inst, const Polynomial& s, Real scan_value) {
    const Real drop = std::log(Real(1e-12));
    auto reach = [&](int dir) {
        Real top = -std::numeric_limits<Real>::infinity();
        Real prev = top;
        const Real h = 0.01L;
        for (int i = 1; i <= 40000; ++i) {
            Real x = dir * h * i;
            Real e = envelope(inst, s, x, scan_value);
            top = std::max(top, e);
            if (e < prev && e < top + drop) return static_cast<double>(std::fabs(x));
            prev = e;
        }
        throw Error(ErrorKind::DomainError, "eigenfunction does not decay; instance not normalizable");
    };
    GridExtent ext;
    if (half_line(inst)) {
        ext.xmin = 0;
        ext.xmax = reach(+1);
    } else {
        double L = std::max(reach(+1), reach(-1));
        ext.xmin = -L;
        ext.xmax = L;
    }
    return ext;
}

WavefunctionGrid sample_default(const ModelInstance& inst, const Polynomial& s, Real scan_value, int points) {
    GridExtent ext = default_extent(inst, s, scan_value);
    if (!half_line(inst)) return sample(inst, s, scan_value, ext.xmin, ext.xmax, points);
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) xs[i] = ext.xmax * (i + 1) / points;
    return sample_at(inst, s, scan_value, std::move(xs));
}

}  // namespace qes
