#pragma once

#include <vector>

#include "qes/models.hpp"
#include "qes/polynomial.hpp"

namespace qes {

struct WavefunctionGrid {
    std::vector<double> xs;
    std::vector<double> psi;
    double norm = 0;  // L2 norm before normalization, in units of max|psi| = 1
    int node_count = 0;
    Parity parity = Parity::None;
};

// psi = Q(x) S(z(x)) on a uniform grid, unit L2 (trapezoid), sign fixed so
// the first interior extremum is positive.
WavefunctionGrid sample(const ModelInstance& inst, const Polynomial& s, Real scan_value,
                        double xmin, double xmax, int points);

// Same on arbitrary increasing abscissae; norm by the trapezoid rule on them.
WavefunctionGrid sample_at(const ModelInstance& inst, const Polynomial& s, Real scan_value,
                           std::vector<double> xs);

Parity parity_classify(const WavefunctionGrid& grid);
int count_nodes(const std::vector<double>& psi);

struct GridExtent {
    double xmin = 0, xmax = 0;
};

// [-L, L] (or (0, L] on the half line) with the envelope |Q| sum|s_k||z|^k
// below 1e-12 of its maximum at the ends.
GridExtent default_extent(const ModelInstance& inst, const Polynomial& s, Real scan_value);

// Default grid: default extent, points; half-line grids skip the origin.
WavefunctionGrid sample_default(const ModelInstance& inst, const Polynomial& s, Real scan_value,
                                int points = 2001);

}  // namespace qes
