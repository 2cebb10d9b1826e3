#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/polynomial.hpp"

namespace qes {

// (a3 z^3 + a2 z^2 + a1 z) phi'' + (b2 z^2 + b1 z + b0) phi' + (c1 z + c0 + c0_scan x) phi = 0
// x is the scan variable; it only ever enters the constant term.
struct OdeCoefficients {
    Real a3 = 0, a2 = 0, a1 = 0;
    Real b2 = 0, b1 = 0, b0 = 0;
    Real c1 = 0, c0 = 0;
    Real c0_scan = 0;

    // scan value folded into c0
    OdeCoefficients at(Real x) const;
};

// F(k; x) = k2 k^2 + k1 k + k0 + sigma x
struct Multiplicator {
    Real k2 = 0, k1 = 0, k0 = 0, sigma = 0;
    Real operator()(Real k) const { return (k2 * k + k1) * k + k0; }
};

struct SliceMultiplicators {
    Multiplicator f1, f0, fm1;
};

SliceMultiplicators multiplicators_from_ode(const OdeCoefficients& ode);

struct BaselineSystem {
    int n = 0;
    SliceMultiplicators mult;
    OdeCoefficients ode;
    std::string scan_variable;
    std::string baseline_label;  // "sqrt(-E)", "E", "M"
    Real baseline_value = 0;

    Real b0() const { return mult.fm1(1); }
};

// Checks F1(n) = 0 and F1(k) != 0 below n; throws BaselineUnsolvable.
void check_baseline(const BaselineSystem& sys);

struct ConstraintChain {
    std::vector<Polynomial> members;  // P_{n,0..n}
    Polynomial constraint;
    int log2_scale = 0;               // true chain = stored * 2^log2_scale
    // recurrence the members came from; assemble_solution replays it at the
    // root because the expanded members cancel badly at large |x|
    std::optional<SliceMultiplicators> source;
};

ConstraintChain run_ttrr(const BaselineSystem& sys);

// monic S_n(z) = sum_k P_{n,n-k}(root) z^k
Polynomial assemble_solution(const ConstraintChain& chain, Real root);

// A s'' + B s' + C s as a polynomial in z
Polynomial ode_residual(const OdeCoefficients& ode, const Polynomial& s);

}  // namespace qes
