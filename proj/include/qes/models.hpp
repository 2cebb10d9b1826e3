#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qes/polynomial.hpp"
#include "qes/recurrence.hpp"

namespace qes {

enum class ModelId { XieEven, XieOdd, ChenEven, ChenOdd, CoulombMagnetic, Razavy, Dshg, PerturbedDshg };
enum class VariableVariant { Native, CoshSq, SinhSq };
enum class Parity { Even, Odd, None };

// V = -V1 sech^6 - V2 sech^4 - V3 sech^2, scan V3
struct XieParams {
    Real V1 = 0, V2 = 0;
};

// V = V1/cosh^2 + V2/(1+g cosh^2) + V3/(1+g cosh^2)^2, scan V2
struct ChenParams {
    Real V1 = 0, V3 = 0, g = 0;
    Real lambda1() const;
    Real lambda2() const;
};

// -u'' + [lambda(lambda-1)/x^2 + x^2/4 - beta/x] u = (alpha/omega) u, scan beta
struct CoulombParams {
    Real lambda = 0, omega = 1;
};

// V = xi^2/4 sinh^2 2x - (M+1) xi cosh 2x, M = 2n+alpha+beta, scan E
struct RazavyParams {
    Real xi = 0;
    int alpha = 0, beta = 0;
};

// V = (xi cosh 2x - M)^2, M = n+1, scan E
struct DshgParams {
    Real xi = 0;
};

// DSHG plus -g(g+1)/cosh^2 + h(h+1)/sinh^2 with alpha(alpha-1) = g(g+1),
// beta(beta-1) = h(h+1); M = 2n+alpha+beta+1, scan E
struct PerturbedDshgParams {
    Real xi = 0, alpha = 0, beta = 0;
    Real g_term() const { return alpha * (alpha - 1); }  // g(g+1)
    Real h_term() const { return beta * (beta - 1); }    // h(h+1)
};

using ModelParams =
    std::variant<XieParams, ChenParams, CoulombParams, RazavyParams, DshgParams, PerturbedDshgParams>;

struct ModelInstance {
    ModelId id = ModelId::XieEven;
    VariableVariant variant = VariableVariant::Native;
    ModelParams params;
    int n = 0;
};

std::string model_name(ModelId id, VariableVariant variant);
// "xie-even", "razavy-sinh2", ...; throws InvalidParams for unknown names
std::pair<ModelId, VariableVariant> parse_model_name(const std::string& name);

// Throws InvalidParams when the instance breaks its parameter constraints.
void validate(const ModelInstance& inst);

std::string scan_variable(ModelId id);
bool is_energy_scan(ModelId id);  // A2 models
Parity parity_label(const ModelInstance& inst);

// Quantity fixed by F1(n) = 0: sqrt(-E) for Xie, E for Chen, alpha/omega for
// Coulomb, M for the hyperbolic models.
Real baseline_value(const ModelInstance& inst);
std::string baseline_label(ModelId id);
// M implied by n for the hyperbolic models
Real model_M(const ModelInstance& inst);

// Coefficients with the scan variable split out as c0_scan.
OdeCoefficients ode_template(const ModelInstance& inst);
OdeCoefficients ode_coefficients(const ModelInstance& inst, Real scan_value);

// Closed-form multiplicator table on the n-th baseline.
SliceMultiplicators multiplicators(const ModelInstance& inst);

// Schroedinger eigenvalue (-d^2/dx^2 + V) belonging to a root.
Real energy(const ModelInstance& inst, Real scan_value);
bool normalizable(const ModelInstance& inst, Real scan_value);
bool double_well_flag(const ModelInstance& inst, Real scan_value);

Real coordinate_map(const ModelInstance& inst, Real x);
bool half_line(const ModelInstance& inst);  // domain is x > 0

struct SignedLog {
    Real log_abs = 0;
    int sign = 1;  // 0 means the value is exactly zero
};

SignedLog ansatz_log(const ModelInstance& inst, Real x, Real scan_value);
Real ansatz_prefactor(const ModelInstance& inst, Real x, Real scan_value);
Real potential(const ModelInstance& inst, Real x, Real scan_value);

struct ParamSpec {
    std::string name;
    std::string constraint;
    std::optional<double> default_value;
};

struct ModelSchema {
    std::string id;
    std::string scan_variable;
    std::vector<ParamSpec> params;
    std::string note;
};

std::vector<ModelSchema> catalog();

}  // namespace qes
