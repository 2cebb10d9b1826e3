#include "qes/ttrr.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "qes/errors.hpp"

namespace qes {

namespace {

// recover the monic form p_k = (t - d'_k) p_{k-1} - lambda'_k p_{k-2}
Real monic_d(const CanonicalTtrr& c, size_t k) {
    return c.sign_variant == SignVariant::Plus ? c.d[k] : -c.d[k];
}
Real monic_lambda(const CanonicalTtrr& c, size_t k) {
    return c.sign_variant == SignVariant::Plus ? c.lambda[k] : -c.lambda[k];
}

}  // namespace

void CanonicalTtrr::eval_monic(Real t, Real& value, Real& slope) const {
    Real p0 = 0, p1 = 1, dp0 = 0, dp1 = 0;
    for (size_t k = 0; k < d.size(); ++k) {
        const Real a = t - monic_d(*this, k), b = monic_lambda(*this, k);
        const Real p2 = a * p1 - b * p0;
        const Real dp2 = p1 + a * dp1 - b * dp0;
        p0 = p1;
        p1 = p2;
        dp0 = dp1;
        dp1 = dp2;
    }
    value = p1;
    slope = dp1;
}

Real CanonicalTtrr::min_lambda() const {
    if (lambda.size() < 2) return 0;
    return *std::min_element(lambda.begin() + 1, lambda.end());
}

CanonicalTtrr to_canonical_ttrr(const BaselineSystem& sys) {
    const int n = sys.n;
    const auto& m = sys.mult;
    const Real sigma = m.f0.sigma;
    if (sigma == 0) throw Error(ErrorKind::SigmaZero, "scan variable does not enter F0");

    // k = n+1 is the constraint step: F0(0) = c0, F_{-1}(1) = b0
    std::vector<Real> dm(n + 1), lm(n + 1, 1);
    for (int k = 1; k <= n + 1; ++k) {
        dm[k - 1] = -m.f0(n + 1 - k) / sigma;
        if (k >= 2) lm[k - 1] = m.fm1(n + 2 - k) * m.f1(n + 1 - k) / (sigma * sigma);
    }

    bool all_pos = true, all_neg = true;
    for (int k = 1; k <= n; ++k) {
        all_pos = all_pos && lm[k] > 0;
        all_neg = all_neg && lm[k] < 0;
    }
    CanonicalTtrr c;
    if (n == 0 || all_pos) {
        c.sign_variant = SignVariant::Plus;
        c.d = dm;
        c.lambda = lm;
    } else if (all_neg) {
        c.sign_variant = SignVariant::Minus;
        c.d.resize(n + 1);
        c.lambda.resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            c.d[k] = -dm[k];
            c.lambda[k] = -lm[k];
        }
        c.lambda[0] = 1;
    } else {
        throw Error(ErrorKind::NonPositiveLambda, "recurrence coefficients change sign; no positive-definite functional");
    }
    return c;
}

namespace {

Real polish_on_recurrence(const CanonicalTtrr& c, Real t0) {
    Real t = t0, f, fp;
    c.eval_monic(t, f, fp);
    for (int it = 0; it < 100 && f != 0 && fp != 0; ++it) {
        Real tn = t - f / fp, fn, fpn;
        c.eval_monic(tn, fn, fpn);
        if (!(std::fabs(fn) < std::fabs(f))) break;
        t = tn;
        f = fn;
        fp = fpn;
    }
    return t;
}

}  // namespace

RootSet real_roots(const CanonicalTtrr& c, const Polynomial& constraint) {
    const int m = static_cast<int>(c.d.size());
    std::vector<Real> t0(m);

    if (c.sign_variant == SignVariant::Plus) {
        Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
        for (int k = 0; k < m; ++k) diag(k) = static_cast<double>(c.d[k]);
        for (int k = 1; k < m; ++k) {
            if (!(c.lambda[k] > 0)) throw Error(ErrorKind::NonPositiveLambda, "lambda_k <= 0");
            sub(k - 1) = static_cast<double>(std::sqrt(c.lambda[k]));
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw Error(ErrorKind::EigensolveFailure, "Jacobi matrix eigensolve failed");
        for (int k = 0; k < m; ++k) t0[k] = es.eigenvalues()(k);
    } else {
        // off-diagonal product is -lambda_k < 0, so the matrix is not symmetrizable
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
        for (int k = 0; k < m; ++k) a(k, k) = static_cast<double>(-c.d[k]);
        for (int k = 1; k < m; ++k) {
            if (!(c.lambda[k] > 0)) throw Error(ErrorKind::NonPositiveLambda, "lambda_k <= 0");
            double s = static_cast<double>(std::sqrt(c.lambda[k]));
            a(k, k - 1) = s;
            a(k - 1, k) = -s;
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
        if (es.info() != Eigen::Success) throw Error(ErrorKind::EigensolveFailure, "tridiagonal eigensolve failed");
        double radius = 0;
        for (int k = 0; k < m; ++k) radius = std::max(radius, std::abs(es.eigenvalues()(k)));
        for (int k = 0; k < m; ++k) {
            if (std::fabs(es.eigenvalues()(k).imag()) > 1e-8 * radius)
                throw Error(ErrorKind::ComplexRootDetected, "constraint polynomial has a non-real root");
            t0[k] = es.eigenvalues()(k).real();
        }
    }

    RootSet rs;
    for (Real t : t0) rs.precise.push_back(c.affine_map.to_scan(polish_on_recurrence(c, t)));
    std::sort(rs.precise.begin(), rs.precise.end());
    for (Real r : rs.precise) rs.roots.push_back(static_cast<double>(r));
    for (double r : rs.roots) rs.residuals.push_back(static_cast<double>(std::fabs(poly_eval(constraint, r))));
    finish_root_set(rs);
    return rs;
}

}  // namespace qes
