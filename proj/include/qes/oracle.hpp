#pragma once

#include <vector>

#include "qes/models.hpp"
#include "qes/wavefunction.hpp"

namespace qes {

// Uniform interior grid with Dirichlet ends on symmetric models; on the
// Coulomb half line a grid uniform in s = ln x, Robin at xmin, Dirichlet at xmax.
struct FdConfig {
    double xmin = -8, xmax = 8;
    int points = 32000;
};

void validate(const FdConfig& cfg, const ModelInstance& inst);

// Abscissae on which the operator is discretized.
std::vector<double> fd_points(const ModelInstance& inst, const FdConfig& cfg);

// Lowest `count` eigenvalues, ascending.
std::vector<double> fd_spectrum(const ModelInstance& inst, Real scan_value, const FdConfig& cfg,
                                int count = 20);
// All eigenvalues in [lo, hi].
std::vector<double> fd_window(const ModelInstance& inst, Real scan_value, const FdConfig& cfg,
                              double lo, double hi);

// Default config for a root: domain from the eigenfunction envelope.
FdConfig default_fd_config(const ModelInstance& inst, const Polynomial& s, Real scan_value);

struct VerificationReport {
    double algebraic_E = 0;
    double nearest_fd_E = 0;
    double abs_gap = 0;
    double refined_gap = 0;  // same with twice the points
    double residual = 0;     // ||(H - E) psi|| / ||psi||
    bool converged = false;
    bool ambiguous = false;  // another FD level within 2 abs_gap
};

// Action residual of sampled psi on its own grid (high-order stencil).
double action_residual(const ModelInstance& inst, Real scan_value, double energy_value,
                       const WavefunctionGrid& grid, const FdConfig& cfg);

VerificationReport verify_root(const ModelInstance& inst, Real root, double energy_value,
                               const WavefunctionGrid& grid, const FdConfig& cfg);

}  // namespace qes
