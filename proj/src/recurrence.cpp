#include "qes/recurrence.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "qes/errors.hpp"

namespace qes {

OdeCoefficients OdeCoefficients::at(Real x) const {
    OdeCoefficients r = *this;
    r.c0 = c0 + c0_scan * x;
    r.c0_scan = 0;
    return r;
}

SliceMultiplicators multiplicators_from_ode(const OdeCoefficients& ode) {
    // k(k-1) a + k b + c, regrouped by powers of k
    SliceMultiplicators m;
    m.f1 = {ode.a3, ode.b2 - ode.a3, ode.c1, 0};
    m.f0 = {ode.a2, ode.b1 - ode.a2, ode.c0, ode.c0_scan};
    m.fm1 = {ode.a1, ode.b0 - ode.a1, 0, 0};
    return m;
}

namespace {

Real term_scale(const Multiplicator& f, Real k) {
    return std::fabs(f.k2 * k * k) + std::fabs(f.k1 * k) + std::fabs(f.k0);
}

bool vanishes(const Multiplicator& f, Real k, Real rel) {
    Real s = term_scale(f, k);
    return std::fabs(f(k)) <= rel * (s > 0 ? s : 1);
}

}  // namespace

void check_baseline(const BaselineSystem& sys) {
    if (sys.n < 0) throw Error(ErrorKind::InvalidParams, "baseline index must be >= 0");
    if (!vanishes(sys.mult.f1, sys.n, 1e-9L))
        throw Error(ErrorKind::BaselineUnsolvable, "F1(n) does not vanish on the requested baseline");
    for (int k = 0; k < sys.n; ++k)
        if (vanishes(sys.mult.f1, k, 1e-12L))
            throw Error(ErrorKind::DivisionByZeroMultiplicator, "F1(k) vanishes below the baseline, k = " + std::to_string(k));
}

ConstraintChain run_ttrr(const BaselineSystem& sys) {
    const int n = sys.n;
    const auto& m = sys.mult;
    const Real sigma = m.f0.sigma;
    if (sigma == 0) throw Error(ErrorKind::SigmaZero, "scan variable does not enter F0");

    ConstraintChain ch;
    ch.source = m;
    ch.members.reserve(n + 1);
    ch.members.push_back(Polynomial::constant(1));
    for (int k = 1; k <= n; ++k) {
        const Real den = m.f1(n - k);
        if (vanishes(m.f1, n - k, 1e-12L))
            throw Error(ErrorKind::DivisionByZeroMultiplicator, "F1(n-k) = 0 at k = " + std::to_string(k));
        Polynomial t = poly_mul_linear(ch.members[k - 1], m.f0(n + 1 - k), sigma);
        if (k >= 2) t = poly_add(t, poly_scale(ch.members[k - 2], m.fm1(n + 2 - k)));
        ch.members.push_back(poly_scale(t, -1 / den));

        Real big = ch.members.back().max_abs_coeff();
        if (big > 1e150L) {
            int e = std::ilogb(big);
            for (auto& p : ch.members) p = poly_scale(p, std::ldexp(Real(1), -e));
            ch.log2_scale += e;
        }
    }
    // one more step with F_{-1}(1) = b0, F0(0) = c0
    ch.constraint = poly_mul_linear(ch.members[n], m.f0(0), sigma);
    if (n >= 1) ch.constraint = poly_add(ch.constraint, poly_scale(ch.members[n - 1], sys.b0()));
    return ch;
}

Polynomial assemble_solution(const ConstraintChain& chain, Real root) {
    const Polynomial& cp = chain.constraint;
    Real scale = poly_eval_scale(cp, root);
    if (!(std::fabs(poly_eval(cp, root)) <= 1e-8L * scale))
        throw Error(ErrorKind::NotARoot, "value is not a root of the constraint polynomial");
    const int n = static_cast<int>(chain.members.size()) - 1;
    std::vector<Real> p(n + 1);
    if (chain.source && n > 0) {
        // null vector of the banded system the chain solves, rows k = 1..n+1.
        // Forward substitution at a rounded root amplifies the rounding
        // enormously for high-lying roots; the SVD null vector does not.
        const auto& m = *chain.source;
        using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
        Mat t = Mat::Zero(n + 1, n + 1);
        for (int k = 1; k <= n + 1; ++k) {
            if (k <= n) t(k - 1, k) = m.f1(n - k);
            t(k - 1, k - 1) = m.f0(n + 1 - k) + m.f0.sigma * root;
            if (k >= 2) t(k - 1, k - 2) = m.fm1(n + 2 - k);
        }
        // components can span many decades; re-solve with the columns scaled
        // by the previous estimate so the small ones come out accurate too
        Eigen::Matrix<Real, Eigen::Dynamic, 1> col = Eigen::Matrix<Real, Eigen::Dynamic, 1>::Ones(n + 1), v;
        for (int pass = 0; pass < 3; ++pass) {
            Eigen::JacobiSVD<Mat> svd(t * col.asDiagonal(), Eigen::ComputeFullV);
            v = col.cwiseProduct(svd.matrixV().col(n));
            const Real floor = v.cwiseAbs().maxCoeff() * 1e-30L;
            col = v.cwiseAbs().cwiseMax(floor);
        }
        if (v(0) == 0) throw Error(ErrorKind::NotARoot, "solution has no leading term");
        for (int k = 0; k <= n; ++k) p[k] = v(k);
    } else {
        for (int k = 0; k <= n; ++k) p[k] = poly_eval(chain.members[k], root);
    }
    std::vector<Real> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = p[n - k] / p[0];
    return Polynomial(std::move(c));
}

Polynomial ode_residual(const OdeCoefficients& ode, const Polynomial& s) {
    Polynomial a({0, ode.a1, ode.a2, ode.a3});
    Polynomial b({ode.b0, ode.b1, ode.b2});
    Polynomial c({ode.c0, ode.c1});
    Polynomial d1 = derivative(s);
    Polynomial d2 = derivative(d1);
    return poly_add(poly_add(poly_mul(a, d2), poly_mul(b, d1)), poly_mul(c, s));
}

}  // namespace qes
