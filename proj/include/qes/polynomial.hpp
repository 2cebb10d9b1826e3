#pragma once

#include <vector>

namespace qes {

// Coefficients are kept in extended precision: the constraint polynomials of
// the double-well models span ~40 decades and lose digits in plain double.
using Real = long double;

// coeffs[i] multiplies x^i; the zero polynomial is the empty list
struct Polynomial {
    std::vector<Real> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Real> c);
    static Polynomial constant(Real c) { return Polynomial({c}); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Real leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
    Real max_abs_coeff() const;
    void trim();
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, Real s);
// (a0 + a1 x) * p
Polynomial poly_mul_linear(const Polynomial& p, Real a0, Real a1);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial derivative(const Polynomial& p);

Real poly_eval(const Polynomial& p, Real x);
// value and first derivative in one Horner pass
void poly_eval_d(const Polynomial& p, Real x, Real& value, Real& slope);
// sum |c_i| |x|^i, the natural scale of rounding error in poly_eval
Real poly_eval_scale(const Polynomial& p, Real x);

struct RootSet {
    std::vector<double> roots;      // strictly increasing
    std::vector<Real> precise;      // same roots before rounding to double
    std::vector<double> residuals;  // |P(root)|
    double min_gap = 0;
    bool simplicity_warning = false;
};

// Fills min_gap and the warning flag from sorted roots.
void finish_root_set(RootSet& rs);

// Newton on a coefficient list; a step is kept only if |p| drops.
Real newton_polish(const Polynomial& p, Real x0);

// Balanced companion matrix eigenvalues, Newton-polished.
RootSet real_roots_companion(const Polynomial& p);

}  // namespace qes
