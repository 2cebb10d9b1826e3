#include "qes/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Dense>

#include "qes/errors.hpp"

namespace qes {

Polynomial::Polynomial(std::vector<Real> c) : coeffs(std::move(c)) {
    for (Real v : coeffs)
        if (!std::isfinite(v)) throw Error(ErrorKind::InvalidParams, "non-finite polynomial coefficient");
    trim();
}

void Polynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Real Polynomial::max_abs_coeff() const {
    Real m = 0;
    for (Real v : coeffs) m = std::max(m, std::fabs(v));
    return m;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    std::vector<Real> r(std::max(p.coeffs.size(), q.coeffs.size()), 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) r[i] += p.coeffs[i];
    for (size_t i = 0; i < q.coeffs.size(); ++i) r[i] += q.coeffs[i];
    return Polynomial(std::move(r));
}

Polynomial poly_scale(const Polynomial& p, Real s) {
    std::vector<Real> r = p.coeffs;
    for (Real& v : r) v *= s;
    return Polynomial(std::move(r));
}

Polynomial poly_mul_linear(const Polynomial& p, Real a0, Real a1) {
    if (p.is_zero()) return {};
    std::vector<Real> r(p.coeffs.size() + 1, 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        r[i] += a0 * p.coeffs[i];
        r[i + 1] += a1 * p.coeffs[i];
    }
    return Polynomial(std::move(r));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Real> r(p.coeffs.size() + q.coeffs.size() - 1, 0);
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        for (size_t j = 0; j < q.coeffs.size(); ++j) r[i + j] += p.coeffs[i] * q.coeffs[j];
    return Polynomial(std::move(r));
}

Polynomial derivative(const Polynomial& p) {
    if (p.coeffs.size() <= 1) return {};
    std::vector<Real> r(p.coeffs.size() - 1);
    for (size_t i = 1; i < p.coeffs.size(); ++i) r[i - 1] = static_cast<Real>(i) * p.coeffs[i];
    return Polynomial(std::move(r));
}

Real poly_eval(const Polynomial& p, Real x) {
    Real v = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

void poly_eval_d(const Polynomial& p, Real x, Real& value, Real& slope) {
    value = 0;
    slope = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        slope = slope * x + value;
        value = value * x + *it;
    }
}

Real poly_eval_scale(const Polynomial& p, Real x) {
    Real v = 0, ax = std::fabs(x);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) v = v * ax + std::fabs(*it);
    return v;
}

void finish_root_set(RootSet& rs) {
    rs.min_gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < rs.roots.size(); ++i) rs.min_gap = std::min(rs.min_gap, rs.roots[i] - rs.roots[i - 1]);
    rs.simplicity_warning = false;
    if (rs.roots.size() > 1) {
        double span = rs.roots.back() - rs.roots.front();
        rs.simplicity_warning = !(rs.min_gap > 1e-10 * span);
    }
}

Real newton_polish(const Polynomial& p, Real x0) {
    Real x = x0, f, fp;
    poly_eval_d(p, x, f, fp);
    for (int it = 0; it < 100 && f != 0 && fp != 0; ++it) {
        Real xn = x - f / fp, fn, fpn;
        poly_eval_d(p, xn, fn, fpn);
        if (!(std::fabs(fn) < std::fabs(f))) break;
        x = xn;
        f = fn;
        fp = fpn;
    }
    return x;
}

namespace {

using MatL = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

// Parlett-Reinsch diagonal similarity with powers of two.
void balance(MatL& a) {
    const int n = static_cast<int>(a.rows());
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            Real c = 0, r = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::fabs(a(j, i));
                r += std::fabs(a(i, j));
            }
            if (c == 0 || r == 0) continue;
            Real g = r / 2, f = 1, s = c + r;
            while (c < g) { f *= 2; c *= 4; }
            g = r * 2;
            while (c > g) { f /= 2; c /= 4; }
            if ((c + r) / f < 0.95L * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

}  // namespace

RootSet real_roots_companion(const Polynomial& p) {
    if (p.degree() < 1) throw Error(ErrorKind::InvalidParams, "companion root finder needs degree >= 1");
    const int n = p.degree();
    MatL c = MatL::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs[i] / p.leading();
    balance(c);

    Eigen::EigenSolver<MatL> es(c, false);
    if (es.info() != Eigen::Success) throw Error(ErrorKind::EigensolveFailure, "companion eigensolve did not converge");
    auto ev = es.eigenvalues();
    Real radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(ev(i)));

    RootSet rs;
    for (int i = 0; i < n; ++i) {
        if (std::fabs(ev(i).imag()) > 1e-8L * radius)
            throw Error(ErrorKind::ComplexRootDetected, "constraint polynomial has a non-real root");
        rs.precise.push_back(newton_polish(p, ev(i).real()));
    }
    std::sort(rs.precise.begin(), rs.precise.end());
    for (Real r : rs.precise) rs.roots.push_back(static_cast<double>(r));
    for (double r : rs.roots) rs.residuals.push_back(static_cast<double>(std::fabs(poly_eval(p, r))));
    finish_root_set(rs);
    return rs;
}

}  // namespace qes
