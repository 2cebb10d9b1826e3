#include "qes/oracle.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include <lapacke.h>

#include "qes/errors.hpp"

namespace qes {

namespace {

bool log_grid(const ModelInstance& inst) { return inst.id == ModelId::CoulombMagnetic; }

struct Tridiagonal {
    std::vector<Real> d, e;
};

// Symmetric tridiagonal form of -d^2/dx^2 + V on the oracle grid.
Tridiagonal assemble(const ModelInstance& inst, Real scan_value, const FdConfig& cfg) {
    validate(cfg, inst);
    const int n = cfg.points;
    Tridiagonal t;
    t.d.resize(n);
    t.e.resize(n - 1);
    if (!log_grid(inst)) {
        const Real h = (Real(cfg.xmax) - cfg.xmin) / (n + 1);
        for (int i = 0; i < n; ++i) t.d[i] = 2 / (h * h) + potential(inst, cfg.xmin + h * (i + 1), scan_value);
        std::fill(t.e.begin(), t.e.end(), -1 / (h * h));
        return t;
    }
    // x = e^s, u = e^{s/2} w:  -w'' + (1/4 + x^2 V) w = E x^2 w
    const Real lam = std::get<CoulombParams>(inst.params).lambda;
    if (!(lam > 0)) throw Error(ErrorKind::DomainError, "log-grid oracle needs lambda > 0");
    const Real s0 = std::log(Real(cfg.xmin)), hs = (std::log(Real(cfg.xmax)) - s0) / n;
    std::vector<Real> diag(n), w(n);
    for (int i = 0; i < n; ++i) {
        const Real x = std::exp(s0 + hs * i);
        diag[i] = 2 / (hs * hs) + Real(0.25) + x * x * potential(inst, x, scan_value);
        w[i] = x * x;
    }
    // Robin end from the small-x expansion u ~ x^lam (1 + a1 x)
    const Real x0 = cfg.xmin, a1 = -scan_value / (2 * lam);
    const Real kappa = (lam - Real(0.5)) + a1 * x0 / (1 + a1 * x0);
    diag[0] = (1 + hs * kappa) / (hs * hs) + (diag[0] - 2 / (hs * hs)) / 2;
    w[0] /= 2;
    for (int i = 0; i < n; ++i) t.d[i] = diag[i] / w[i];
    for (int i = 0; i + 1 < n; ++i) t.e[i] = -1 / (hs * hs) / std::sqrt(w[i] * w[i + 1]);
    return t;
}

// number of eigenvalues below x (Sturm sequence, long double)
int count_below(const Tridiagonal& t, Real x) {
    int c = 0;
    Real q = 1;
    for (size_t i = 0; i < t.d.size(); ++i) {
        Real off = i == 0 ? 0 : t.e[i - 1] * t.e[i - 1] / q;
        q = t.d[i] - x - off;
        if (q == 0) q = -std::numeric_limits<Real>::epsilon() * (std::fabs(t.d[i]) + std::fabs(x) + 1);
        if (q < 0) ++c;
    }
    return c;
}

// Eigenvalue with Sturm index k (0-based), starting from a double-precision
// estimate. The diagonal carries 2/h^2, so in double the answer is only good
// to eps * 4/h^2; on fine grids that floor masks the discretization error.
Real sturm_refine(const Tridiagonal& t, int k, Real guess) {
    Real step = 1e-9L * (1 + std::fabs(guess)), lo = guess - step, hi = guess + step;
    while (count_below(t, lo) > k) lo -= (step *= 2);
    step = 1e-9L * (1 + std::fabs(guess));
    while (count_below(t, hi) <= k) hi += (step *= 2);
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<Real>::epsilon() * std::fabs(hi); ++it) {
        Real mid = (lo + hi) / 2;
        (count_below(t, mid) > k ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
}

std::vector<double> stebz(const Tridiagonal& t, char range, double vl, double vu, int il, int iu) {
    const int n = static_cast<int>(t.d.size());
    std::vector<double> d(t.d.begin(), t.d.end()), e(t.e.begin(), t.e.end());
    std::vector<double> w(n);
    std::vector<lapack_int> iblock(n), isplit(n);
    lapack_int m = 0, nsplit = 0;
    const double abstol = 2 * DBL_MIN;
    lapack_int info = LAPACKE_dstebz(range, 'E', n, vl, vu, il, iu, abstol, d.data(), e.data(), &m, &nsplit,
                                     w.data(), iblock.data(), isplit.data());
    if (info < 0) throw Error(ErrorKind::EigensolveFailure, "dstebz rejected its arguments");
    w.resize(m);
    std::sort(w.begin(), w.end());
    if (m == 0) return w;
    const int first = range == 'I' ? il - 1 : count_below(t, Real(w.front()) - 1e-6L * (1 + std::fabs(w.front())));
    for (int j = 0; j < m; ++j) w[j] = static_cast<double>(sturm_refine(t, first + j, w[j]));
    return w;
}

Real sq_l(Real v) { return v * v; }

// interior of a vector where a 9-point stencil fits
constexpr double kD2[5] = {-205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315, -1.0 / 560};

template <class F>
Real d2(const F& f, int i, Real h) {
    Real acc = kD2[0] * f(i);
    for (int k = 1; k <= 4; ++k) acc += kD2[k] * (f(i - k) + f(i + k));
    return acc / (h * h);
}

}  // namespace

void validate(const FdConfig& cfg, const ModelInstance& inst) {
    if (cfg.points < 100) throw Error(ErrorKind::InvalidParams, "FD grid needs at least 100 points");
    if (!(cfg.xmin < cfg.xmax)) throw Error(ErrorKind::InvalidParams, "FD domain needs xmin < xmax");
    if (log_grid(inst) && !(cfg.xmin > 0)) throw Error(ErrorKind::InvalidParams, "Coulomb FD domain needs xmin > 0");
    if (half_line(inst) && cfg.xmin < 0) throw Error(ErrorKind::InvalidParams, "half-line model needs xmin >= 0");
}

std::vector<double> fd_points(const ModelInstance& inst, const FdConfig& cfg) {
    validate(cfg, inst);
    std::vector<double> xs(cfg.points);
    if (log_grid(inst)) {
        const Real s0 = std::log(Real(cfg.xmin)), hs = (std::log(Real(cfg.xmax)) - s0) / cfg.points;
        for (int i = 0; i < cfg.points; ++i) xs[i] = static_cast<double>(std::exp(s0 + hs * i));
    } else {
        const Real h = (Real(cfg.xmax) - cfg.xmin) / (cfg.points + 1);
        for (int i = 0; i < cfg.points; ++i) xs[i] = static_cast<double>(cfg.xmin + h * (i + 1));
    }
    return xs;
}

std::vector<double> fd_spectrum(const ModelInstance& inst, Real scan_value, const FdConfig& cfg, int count) {
    count = std::min(count, cfg.points);
    return stebz(assemble(inst, scan_value, cfg), 'I', 0, 0, 1, count);
}

std::vector<double> fd_window(const ModelInstance& inst, Real scan_value, const FdConfig& cfg, double lo, double hi) {
    return stebz(assemble(inst, scan_value, cfg), 'V', lo, hi, 0, 0);
}

FdConfig default_fd_config(const ModelInstance& inst, const Polynomial& s, Real scan_value) {
    GridExtent ext = default_extent(inst, s, scan_value);
    if (log_grid(inst)) return {1e-5, ext.xmax, 8000};
    return {ext.xmin, ext.xmax, 64000};
}

double action_residual(const ModelInstance& inst, Real scan_value, double energy_value, const WavefunctionGrid& grid,
                       const FdConfig& cfg) {
    const int n = static_cast<int>(grid.psi.size());
    const Real E = energy_value;
    Real num = 0, den = 0;
    if (!log_grid(inst)) {
        const Real h = (Real(cfg.xmax) - cfg.xmin) / (cfg.points + 1);
        auto f = [&](int i) { return Real(grid.psi[i]); };
        for (int i = 4; i + 4 < n; ++i) {
            Real r = -d2(f, i, h) + (potential(inst, grid.xs[i], scan_value) - E) * f(i);
            num += r * r;
        }
        for (double v : grid.psi) den += Real(v) * v;
    } else {
        // (H - E) psi = x^{-3/2} [-w'' + (1/4 + x^2 (V - E)) w]. Measured as
        // ||x (H - E) psi|| / ||x psi||: the plain norm weights the bracket by
        // 1/x^2 and near xmin = 1e-5 that only magnifies the rounding of psi.
        const Real s0 = std::log(Real(cfg.xmin)), hs = (std::log(Real(cfg.xmax)) - s0) / cfg.points;
        std::vector<Real> w(n);
        for (int i = 0; i < n; ++i) w[i] = grid.psi[i] / std::sqrt(Real(grid.xs[i]));
        auto f = [&](int i) { return w[i]; };
        for (int i = 4; i + 4 < n; ++i) {
            const Real x = grid.xs[i];
            Real r = -d2(f, i, hs) + (Real(0.25) + x * x * (potential(inst, x, scan_value) - E)) * w[i];
            num += r * r;
        }
        for (int i = 0; i < n; ++i) den += sq_l(grid.xs[i] * grid.xs[i] * w[i]);
    }
    return static_cast<double>(std::sqrt(num / den));
}

VerificationReport verify_root(const ModelInstance& inst, Real root, double energy_value, const WavefunctionGrid& grid,
                               const FdConfig& cfg) {
    std::vector<double> xs = fd_points(inst, cfg);
    if (xs.size() != grid.xs.size()) throw Error(ErrorKind::GridMismatch, "wavefunction grid is not the oracle grid");
    for (size_t i = 0; i < xs.size(); ++i)
        if (std::fabs(xs[i] - grid.xs[i]) > 1e-12 * (1 + std::fabs(xs[i])))
            throw Error(ErrorKind::GridMismatch, "wavefunction grid is not the oracle grid");

    auto nearest = [&](const FdConfig& c, double& other_gap) {
        Tridiagonal t = assemble(inst, root, c);
        double half = 1 + 1e-3 * std::fabs(energy_value);
        for (int attempt = 0; attempt < 12; ++attempt, half *= 4) {
            std::vector<double> ev = stebz(t, 'V', energy_value - half, energy_value + half, 0, 0);
            if (ev.empty()) continue;
            std::sort(ev.begin(), ev.end(), [&](double a, double b) {
                return std::fabs(a - energy_value) < std::fabs(b - energy_value);
            });
            other_gap = ev.size() > 1 ? std::fabs(ev[1] - energy_value) : std::numeric_limits<double>::infinity();
            return ev[0];
        }
        throw Error(ErrorKind::VerificationFailed, "no FD eigenvalue anywhere near the algebraic energy");
    };

    VerificationReport rep;
    rep.algebraic_E = energy_value;
    double other = 0, other_fine = 0;
    rep.nearest_fd_E = nearest(cfg, other);
    rep.abs_gap = std::fabs(rep.nearest_fd_E - energy_value);
    rep.ambiguous = other < 2 * rep.abs_gap;

    FdConfig fine = cfg;
    fine.points = log_grid(inst) ? 2 * cfg.points : 2 * cfg.points + 1;
    rep.refined_gap = std::fabs(nearest(fine, other_fine) - energy_value);
    rep.converged = rep.refined_gap * 3 <= rep.abs_gap || (rep.abs_gap < 1e-8 && rep.refined_gap < 1e-8);

    rep.residual = action_residual(inst, root, energy_value, grid, cfg);
    return rep;
}

}  // namespace qes
