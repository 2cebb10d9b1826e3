#pragma once

#include <vector>

#include "qes/polynomial.hpp"
#include "qes/recurrence.hpp"

namespace qes {

enum class SignVariant { Plus, Minus };

struct AffineMap {
    Real scale = 1, shift = 0;
    Real to_scan(Real t) const { return scale * t + shift; }
};

// Plus:  P_k = ( t - d_k) P_{k-1} - lambda_k P_{k-2}
// Minus: P_k = (-t - d_k) P_{k-1} + lambda_k P_{k-2}
// k = 1..n+1, the last step being the constraint polynomial.
struct CanonicalTtrr {
    SignVariant sign_variant = SignVariant::Plus;
    std::vector<Real> d;
    std::vector<Real> lambda;  // lambda[0] is a placeholder (multiplies P_{-1} = 0)
    AffineMap affine_map;

    // monic P_{n+1}(t) and its derivative, via the recurrence
    void eval_monic(Real t, Real& value, Real& slope) const;
    Real min_lambda() const;
};

CanonicalTtrr to_canonical_ttrr(const BaselineSystem& sys);

// Eigenvalues of the Jacobi matrix, polished on the recurrence; residuals
// are |constraint(root)|.
RootSet real_roots(const CanonicalTtrr& ttrr, const Polynomial& constraint);

}  // namespace qes
