#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/models.hpp"
#include "qes/oracle.hpp"
#include "qes/polynomial.hpp"
#include "qes/recurrence.hpp"
#include "qes/ttrr.hpp"

namespace qes {

struct RootEntry {
    double scan_value = 0;
    double energy = 0;
    bool normalizable = false;
    std::optional<bool> double_well;
    std::optional<int> node_count;
    std::optional<VerificationReport> verification;
};

struct SpectrumResult {
    ModelInstance inst;
    double baseline = 0;
    std::string baseline_label;
    std::vector<RootEntry> roots;
    bool p_nn_zero = false;
    double min_lambda = 0;
    SignVariant sign_variant = SignVariant::Plus;
};

// Everything needed downstream of a baseline.
struct Pipeline {
    BaselineSystem sys;
    ConstraintChain chain;
    CanonicalTtrr ttrr;
    RootSet roots;
};

Pipeline run_pipeline(const ModelInstance& inst);

struct SolveOptions {
    bool nodes = false;
    bool verify = false;
};

SpectrumResult solve_spectrum(const ModelInstance& inst, const SolveOptions& opts = {});

}  // namespace qes
