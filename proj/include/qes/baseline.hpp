#pragma once

#include "qes/models.hpp"
#include "qes/recurrence.hpp"

namespace qes {

// Fixes the n-th baseline for a catalog model: energy eliminated for the
// Xie/Chen/Coulomb families, M fixed for the hyperbolic ones.
BaselineSystem build_baseline(const ModelInstance& inst);

}  // namespace qes
