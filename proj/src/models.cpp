#include "qes/models.hpp"

#include <cmath>

#include "qes/errors.hpp"

namespace qes {

namespace {

Real sq(Real v) { return v * v; }

Real log_cosh(Real x) {
    Real a = std::fabs(x);
    return a + std::log1p(std::exp(-2 * a)) - std::log(Real(2));
}

int sign_of(Real x) { return (x > 0) - (x < 0); }

bool sinh_variant(const ModelInstance& inst) { return inst.variant == VariableVariant::SinhSq; }

bool is_integer(Real v) { return v == std::floor(v); }

// sqrt(-E) on the Xie baseline
Real xie_root_energy(const ModelInstance& inst) {
    const auto& p = std::get<XieParams>(inst.params);
    Real r = std::sqrt(p.V1), u = (p.V1 + p.V2) / (2 * r);
    return -2 * inst.n - u - (inst.id == ModelId::XieEven ? Real(1.5) : Real(2.5));
}

Real chen_energy(const ModelInstance& inst) {
    const auto& p = std::get<ChenParams>(inst.params);
    Real L = p.lambda1() + p.lambda2(), n = inst.n;
    return inst.id == ModelId::ChenEven ? -4 * sq(n + L) : -1 - 4 * (n + L) * (n + L + 1);
}

template <class P>
const P& params_as(const ModelInstance& inst) {
    if (!std::holds_alternative<P>(inst.params))
        throw Error(ErrorKind::InvalidParams, "parameter set does not match model " + model_name(inst.id, inst.variant));
    return std::get<P>(inst.params);
}

}  // namespace

Real ChenParams::lambda1() const { return (1 + std::sqrt(1 - 4 * V1)) / 4; }
Real ChenParams::lambda2() const { return (1 - std::sqrt(1 + V3 / (1 + g))) / 2; }

std::string model_name(ModelId id, VariableVariant variant) {
    const bool sh = variant == VariableVariant::SinhSq;
    switch (id) {
        case ModelId::XieEven: return "xie-even";
        case ModelId::XieOdd: return "xie-odd";
        case ModelId::ChenEven: return "chen-even";
        case ModelId::ChenOdd: return "chen-odd";
        case ModelId::CoulombMagnetic: return "coulomb";
        case ModelId::Razavy: return sh ? "razavy-sinh2" : "razavy";
        case ModelId::Dshg: return "dshg";
        case ModelId::PerturbedDshg: return sh ? "perturbed-dshg-sinh2" : "perturbed-dshg";
    }
    return "?";
}

std::pair<ModelId, VariableVariant> parse_model_name(const std::string& name) {
    using V = VariableVariant;
    if (name == "xie-even") return {ModelId::XieEven, V::Native};
    if (name == "xie-odd") return {ModelId::XieOdd, V::Native};
    if (name == "chen-even") return {ModelId::ChenEven, V::Native};
    if (name == "chen-odd") return {ModelId::ChenOdd, V::Native};
    if (name == "coulomb") return {ModelId::CoulombMagnetic, V::Native};
    if (name == "razavy") return {ModelId::Razavy, V::CoshSq};
    if (name == "razavy-sinh2") return {ModelId::Razavy, V::SinhSq};
    if (name == "dshg") return {ModelId::Dshg, V::Native};
    if (name == "perturbed-dshg") return {ModelId::PerturbedDshg, V::CoshSq};
    if (name == "perturbed-dshg-sinh2") return {ModelId::PerturbedDshg, V::SinhSq};
    throw Error(ErrorKind::InvalidParams, "unknown model '" + name + "'");
}

void validate(const ModelInstance& inst) {
    auto need = [](bool ok, const std::string& msg) {
        if (!ok) throw Error(ErrorKind::InvalidParams, msg);
    };
    need(inst.n >= 0, "n must be >= 0");
    const bool alt = inst.id == ModelId::Razavy || inst.id == ModelId::PerturbedDshg;
    need(inst.variant != VariableVariant::SinhSq || alt, "sinh^2 variable only exists for razavy and perturbed-dshg");
    need(inst.variant != VariableVariant::CoshSq || alt, "cosh^2 variable only exists for razavy and perturbed-dshg");

    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: {
            const auto& p = params_as<XieParams>(inst);
            need(std::isfinite(p.V1) && std::isfinite(p.V2), "V1, V2 must be finite");
            need(p.V1 >= 0, "V1 > 0 required");
            if (p.V1 == 0) throw Error(ErrorKind::BaselineUnsolvable, "V1 = 0: baseline energy divides by sqrt(V1)");
            break;
        }
        case ModelId::ChenEven:
        case ModelId::ChenOdd: {
            const auto& p = params_as<ChenParams>(inst);
            need(p.g > 0, "g > 0 required");
            need(p.V1 <= 0.25L, "V1 <= 1/4 required");
            need(p.V3 / (1 + p.g) >= -1, "V3/(1+g) >= -1 required");
            break;
        }
        case ModelId::CoulombMagnetic: {
            const auto& p = params_as<CoulombParams>(inst);
            need(p.omega > 0, "omega > 0 required");
            need(p.lambda > -0.5L, "lambda > -1/2 required");
            break;
        }
        case ModelId::Razavy: {
            const auto& p = params_as<RazavyParams>(inst);
            need(p.xi > 0, "xi > 0 required");
            need((p.alpha == 0 || p.alpha == 1) && (p.beta == 0 || p.beta == 1), "alpha, beta must be 0 or 1");
            break;
        }
        case ModelId::Dshg:
            need(params_as<DshgParams>(inst).xi > 0, "xi > 0 required");
            break;
        case ModelId::PerturbedDshg: {
            const auto& p = params_as<PerturbedDshgParams>(inst);
            need(p.xi > 0, "xi > 0 required");
            need(std::isfinite(p.alpha), "alpha must be finite");
            need(p.h_term() > -0.25L && p.h_term() <= 0, "h(h+1) = beta(beta-1) must lie in (-1/4, 0]");
            break;
        }
    }
}

std::string scan_variable(ModelId id) {
    switch (id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: return "V3";
        case ModelId::ChenEven:
        case ModelId::ChenOdd: return "V2";
        case ModelId::CoulombMagnetic: return "beta";
        default: return "E";
    }
}

bool is_energy_scan(ModelId id) { return scan_variable(id) == "E"; }

Parity parity_label(const ModelInstance& inst) {
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::ChenEven: return Parity::Even;
        case ModelId::XieOdd:
        case ModelId::ChenOdd: return Parity::Odd;
        case ModelId::Razavy: return std::get<RazavyParams>(inst.params).beta == 0 ? Parity::Even : Parity::Odd;
        case ModelId::PerturbedDshg: {
            Real b = std::get<PerturbedDshgParams>(inst.params).beta;
            return b == 0 ? Parity::Even : b == 1 ? Parity::Odd : Parity::None;
        }
        default: return Parity::None;
    }
}

Real model_M(const ModelInstance& inst) {
    switch (inst.id) {
        case ModelId::Razavy: {
            const auto& p = std::get<RazavyParams>(inst.params);
            return 2 * inst.n + p.alpha + p.beta;
        }
        case ModelId::Dshg: return inst.n + 1;
        case ModelId::PerturbedDshg: {
            const auto& p = std::get<PerturbedDshgParams>(inst.params);
            return 2 * inst.n + p.alpha + p.beta + 1;
        }
        default: throw Error(ErrorKind::WrongModel, "M only exists for the hyperbolic models");
    }
}

Real baseline_value(const ModelInstance& inst) {
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: return xie_root_energy(inst);
        case ModelId::ChenEven:
        case ModelId::ChenOdd: return chen_energy(inst);
        case ModelId::CoulombMagnetic: return inst.n + std::get<CoulombParams>(inst.params).lambda + Real(0.5);
        default: return model_M(inst);
    }
}

std::string baseline_label(ModelId id) {
    switch (id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: return "sqrt(-E)";
        case ModelId::ChenEven:
        case ModelId::ChenOdd: return "E";
        case ModelId::CoulombMagnetic: return "alpha/omega";
        default: return "M";
    }
}

OdeCoefficients ode_template(const ModelInstance& inst) {
    validate(inst);
    OdeCoefficients o;
    const Real n = inst.n;
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: {
            const auto& p = std::get<XieParams>(inst.params);
            const Real r = std::sqrt(p.V1), s = xie_root_energy(inst);
            o.a2 = 4;
            o.a1 = -4;
            o.b2 = 4 * r;
            o.c0_scan = -1;
            if (inst.id == ModelId::XieEven) {
                o.b1 = 6 + 4 * (s - r);
                o.b0 = -2;
                o.c1 = p.V1 + p.V2 + 3 * r + 2 * r * s;
                o.c0 = s + s * s - r - p.V1 - p.V2;
            } else {
                o.b1 = 10 + 4 * (s - r);
                o.b0 = -6;
                o.c1 = p.V1 + p.V2 + 5 * r + 2 * r * s;
                o.c0 = s * s + 3 * s + 2 - 3 * r - p.V1 - p.V2;
            }
            break;
        }
        case ModelId::ChenEven:
        case ModelId::ChenOdd: {
            const auto& p = std::get<ChenParams>(inst.params);
            const Real g = p.g, l1 = p.lambda1(), l2 = p.lambda2(), L = l1 + l2, E = chen_energy(inst);
            const Real pre = -(1 + g) / (4 * g);
            const Real common = 2 * l2 * g / (1 + g) - p.V1 - p.V3 / sq(1 + g) + E;
            o.a3 = 1;
            o.a2 = -2 - 1 / g;
            o.a1 = 1 + 1 / g;
            o.c0_scan = 1 / (4 * g);  // -V2/(1+g) inside the bracket
            if (inst.id == ModelId::ChenEven) {
                o.b2 = 2 * L + 1;
                o.b1 = -(2 * L + Real(1.5) + (2 * l1 + 1) / g);
                o.b0 = (1 + g) / (2 * g);
                o.c1 = L * L + E / 4;
                o.c0 = pre * (2 * l1 + common);
            } else {
                o.b2 = 2 * (L + 1);
                o.b1 = -(2 * L + Real(3.5) + 2 * (l1 + 1) / g);
                o.b0 = 3 * (1 + g) / (2 * g);
                o.c1 = L * (L + 1) + (E + 1) / 4;
                o.c0 = pre * (6 * l1 + 4 * l2 + 1 + common) + l2 / g;
            }
            break;
        }
        case ModelId::CoulombMagnetic: {
            const auto& p = std::get<CoulombParams>(inst.params);
            o.a1 = 1;
            o.b2 = -1;
            o.b0 = 2 * p.lambda;
            o.c1 = n;  // epsilon = n on the baseline
            o.c0_scan = 1;
            break;
        }
        case ModelId::Razavy: {
            const auto& p = std::get<RazavyParams>(inst.params);
            const Real xi = p.xi, a = p.alpha, b = p.beta, M = model_M(inst);
            o.a2 = 4;
            o.b2 = -4 * xi;
            o.c1 = 2 * xi * (M - a - b);
            o.c0_scan = 1;
            if (sinh_variant(inst)) {
                o.a1 = 4;
                o.b1 = 4 * (a + b - xi + 1);
                o.b0 = 2 * (2 * b + 1);
                o.c0 = sq(a + b) + xi * (M - 2 * b);
            } else {
                o.a1 = -4;
                o.b1 = 4 * (a + b + xi + 1);
                o.b0 = -2 * (2 * a + 1);
                o.c0 = sq(a + b) + xi * (2 * a - M);
            }
            break;
        }
        case ModelId::Dshg: {
            const Real xi = std::get<DshgParams>(inst.params).xi, M = model_M(inst);
            o.a2 = 4;
            o.b2 = -2 * xi;
            o.b1 = 8 - 4 * M;
            o.b0 = 2 * xi;
            o.c1 = 2 * xi * (M - 1);
            o.c0 = 1 - 2 * M - xi * xi;
            o.c0_scan = 1;
            break;
        }
        case ModelId::PerturbedDshg: {
            const auto& p = std::get<PerturbedDshgParams>(inst.params);
            const Real xi = p.xi, a = p.alpha, b = p.beta, M = model_M(inst);
            o.a2 = 4;
            o.b2 = -8 * xi;
            o.c1 = 4 * xi * (M - a - b - 1);
            o.c0_scan = 1;
            if (sinh_variant(inst)) {
                o.a1 = 4;
                o.b1 = 4 * (a + b - 2 * xi + 1);
                o.b0 = 2 * (2 * b + 1);
                o.c0 = -M * M - xi * xi + sq(a + b) + 2 * xi * (M - 2 * b - 1);
            } else {
                o.a1 = -4;
                o.b1 = 4 * (a + b + 2 * xi + 1);
                o.b0 = -2 * (2 * a + 1);
                o.c0 = -M * M - xi * xi + sq(a + b) + 2 * xi * (2 * a - M + 1);
            }
            break;
        }
    }
    return o;
}

OdeCoefficients ode_coefficients(const ModelInstance& inst, Real scan_value) {
    return ode_template(inst).at(scan_value);
}

SliceMultiplicators multiplicators(const ModelInstance& inst) {
    validate(inst);
    SliceMultiplicators m;
    const Real n = inst.n;
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: {
            // F1 = -4(n-k) sqrt(V1), F0 = 2k[2k+1+2(sqrt(-E)-sqrt(V1))] + c0(n), F-1 = -2k(2k-1)
            // odd: 2k+3 in F0, F-1 = -2k(2k+1)
            const auto& p = std::get<XieParams>(inst.params);
            const Real r = std::sqrt(p.V1), s = xie_root_energy(inst);
            const bool even = inst.id == ModelId::XieEven;
            m.f1 = {0, 4 * r, -4 * n * r, 0};
            m.f0 = {4, 2 * ((even ? 1 : 3) + 2 * (s - r)), 0, -1};
            m.f0.k0 = even ? s + s * s - r - p.V1 - p.V2 : s * s + 3 * s + 2 - 3 * r - p.V1 - p.V2;
            m.fm1 = {-4, even ? Real(2) : Real(-2), 0, 0};
            break;
        }
        case ModelId::ChenEven:
        case ModelId::ChenOdd: {
            // even: F1 = k^2-n^2+2(k-n)L, F-1 = (1+g)/(2g) k(2k-1)
            // odd:  F1 = k(k-1)-n(n-1)+2(k-n)(L+1), F-1 = (1+g)/(2g) k(2k+1)
            const auto& p = std::get<ChenParams>(inst.params);
            const Real g = p.g, l1 = p.lambda1(), l2 = p.lambda2(), L = l1 + l2, E = chen_energy(inst);
            const Real w = 2 + 1 / g, h = (1 + g) / (2 * g);
            const Real common = 2 * l2 * g / (1 + g) - p.V1 - p.V3 / sq(1 + g) + E;
            if (inst.id == ModelId::ChenEven) {
                m.f1 = {1, 2 * L, -n * n - 2 * n * L, 0};
                m.f0 = {-w, w - (2 * L + Real(1.5) + (2 * l1 + 1) / g), -(1 + g) / (4 * g) * (2 * l1 + common), 1 / (4 * g)};
                m.fm1 = {2 * h, -h, 0, 0};
            } else {
                m.f1 = {1, 2 * L + 1, -n * (n - 1) - 2 * n * (L + 1), 0};
                m.f0 = {-w, w - (2 * L + Real(3.5) + 2 * (l1 + 1) / g),
                        -(1 + g) / (4 * g) * (6 * l1 + 4 * l2 + 1 + common) + l2 / g, 1 / (4 * g)};
                m.fm1 = {2 * h, h, 0, 0};
            }
            break;
        }
        case ModelId::CoulombMagnetic: {
            // F1 = n-k, F0 = beta, F-1 = k(k-1)+2k lambda
            const Real lam = std::get<CoulombParams>(inst.params).lambda;
            m.f1 = {0, -1, n, 0};
            m.f0 = {0, 0, 0, 1};
            m.fm1 = {1, 2 * lam - 1, 0, 0};
            break;
        }
        case ModelId::Razavy: {
            // F1 = 4 xi (n-k)
            // cosh^2: F0 = 4k(k+a+b+xi) + (a+b)^2 - xi(2n+b-a) + E, F-1 = -2k(2k-1+2a)
            // sinh^2: F0 = 4k(k+a+b-xi) + (a+b)^2 + xi(2n+a-b) + E, F-1 = 2k(2k-1+2b)
            const auto& p = std::get<RazavyParams>(inst.params);
            const Real xi = p.xi, a = p.alpha, b = p.beta;
            m.f1 = {0, -4 * xi, 4 * xi * n, 0};
            if (sinh_variant(inst)) {
                m.f0 = {4, 4 * (a + b - xi), sq(a + b) + xi * (2 * n + a - b), 1};
                m.fm1 = {4, 2 * (2 * b - 1), 0, 0};
            } else {
                m.f0 = {4, 4 * (a + b + xi), sq(a + b) - xi * (2 * n + b - a), 1};
                m.fm1 = {-4, -2 * (2 * a - 1), 0, 0};
            }
            break;
        }
        case ModelId::Dshg: {
            // F1 = 2 xi (n-k), F0 = -4k(n-k) + E - xi^2 - 2n - 1, F-1 = 2k xi
            const Real xi = std::get<DshgParams>(inst.params).xi;
            m.f1 = {0, -2 * xi, 2 * xi * n, 0};
            m.f0 = {4, -4 * n, -xi * xi - 2 * n - 1, 1};
            m.fm1 = {0, 2 * xi, 0, 0};
            break;
        }
        case ModelId::PerturbedDshg: {
            // F1 = 8 xi (n-k)
            // cosh^2: F0 = 4k(k+a+b+2xi) + c0(n), F-1 = -2k(2k-1+2a)
            // sinh^2: F0 = 4k(k+a+b-2xi) + c0(n), F-1 = 2k(2k-1+2b)
            const auto& p = std::get<PerturbedDshgParams>(inst.params);
            const Real xi = p.xi, a = p.alpha, b = p.beta;
            const Real base = -(2 * n + 1) * (2 * n + 1 + 2 * a + 2 * b) - xi * xi;
            m.f1 = {0, -8 * xi, 8 * xi * n, 0};
            if (sinh_variant(inst)) {
                m.f0 = {4, 4 * (a + b - 2 * xi), base + 2 * xi * (2 * n + a - b), 1};
                m.fm1 = {4, 2 * (2 * b - 1), 0, 0};
            } else {
                m.f0 = {4, 4 * (a + b + 2 * xi), base + 2 * xi * (a - b - 2 * n), 1};
                m.fm1 = {-4, -2 * (2 * a - 1), 0, 0};
            }
            break;
        }
    }
    return m;
}

Real energy(const ModelInstance& inst, Real scan_value) {
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: return -sq(xie_root_energy(inst));
        case ModelId::ChenEven:
        case ModelId::ChenOdd: return chen_energy(inst);
        case ModelId::CoulombMagnetic: return baseline_value(inst);
        default: return scan_value;
    }
}

bool normalizable(const ModelInstance& inst, Real) {
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: return xie_root_energy(inst) > 0;
        case ModelId::ChenEven:
        case ModelId::ChenOdd: {
            const auto& p = std::get<ChenParams>(inst.params);
            Real t = p.lambda1() + p.lambda2() + inst.n;
            return inst.id == ModelId::ChenEven ? t < 0 : t < Real(-0.5);
        }
        case ModelId::CoulombMagnetic: return std::get<CoulombParams>(inst.params).lambda > Real(-0.5);
        default: return true;
    }
}

bool double_well_flag(const ModelInstance& inst, Real scan_value) {
    if (inst.id != ModelId::XieEven && inst.id != ModelId::XieOdd)
        throw Error(ErrorKind::WrongModel, "double-well test is defined for the Xie potentials only");
    const auto& p = std::get<XieParams>(inst.params);
    const Real V3 = scan_value;
    return p.V1 > 0 && p.V2 < 0 && V3 > 0 && -V3 / (2 * p.V2) < 1;
}

bool half_line(const ModelInstance& inst) {
    if (inst.id == ModelId::CoulombMagnetic) return true;
    if (inst.id == ModelId::PerturbedDshg) return std::get<PerturbedDshgParams>(inst.params).h_term() != 0;
    return false;
}

Real coordinate_map(const ModelInstance& inst, Real x) {
    if (half_line(inst) && !(x > 0)) throw Error(ErrorKind::DomainError, "model lives on x > 0");
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: return sq(std::tanh(x));
        case ModelId::ChenEven:
        case ModelId::ChenOdd: return -sq(std::sinh(x));
        case ModelId::CoulombMagnetic: return x;
        case ModelId::Dshg: return std::exp(2 * x);
        default: return sinh_variant(inst) ? sq(std::sinh(x)) : sq(std::cosh(x));
    }
}

SignedLog ansatz_log(const ModelInstance& inst, Real x, Real) {
    if (half_line(inst) && !(x > 0)) throw Error(ErrorKind::DomainError, "model lives on x > 0");
    SignedLog q;
    auto times_odd = [&](Real f) {
        if (f == 0) {
            q.sign = 0;
            return;
        }
        q.log_abs += std::log(std::fabs(f));
        q.sign *= sign_of(f);
    };
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: {
            const auto& p = std::get<XieParams>(inst.params);
            const Real s = xie_root_energy(inst);
            // exp(sqrt(V1)/2 tanh^2 x) (1 - tanh^2 x)^{s/2}
            q.log_abs = std::sqrt(p.V1) / 2 * sq(std::tanh(x)) - s * log_cosh(x);
            if (inst.id == ModelId::XieOdd) times_odd(std::tanh(x));
            break;
        }
        case ModelId::ChenEven:
        case ModelId::ChenOdd: {
            const auto& p = std::get<ChenParams>(inst.params);
            q.log_abs = 2 * p.lambda1() * log_cosh(x) + p.lambda2() * std::log1p(p.g * sq(std::cosh(x)));
            if (inst.id == ModelId::ChenOdd) times_odd(std::sinh(x));
            break;
        }
        case ModelId::CoulombMagnetic: {
            const Real lam = std::get<CoulombParams>(inst.params).lambda;
            q.log_abs = lam * std::log(x) - x * x / 4;
            break;
        }
        case ModelId::Razavy: {
            const auto& p = std::get<RazavyParams>(inst.params);
            q.log_abs = -p.xi / 4 * std::cosh(2 * x) + p.alpha * log_cosh(x);
            if (p.beta == 1) times_odd(std::sinh(x));
            break;
        }
        case ModelId::Dshg: {
            // z^{(1-M)/2} exp(-xi/4 (z + 1/z)), z = e^{2x}
            const Real xi = std::get<DshgParams>(inst.params).xi;
            q.log_abs = (1 - model_M(inst)) * x - xi / 2 * std::cosh(2 * x);
            break;
        }
        case ModelId::PerturbedDshg: {
            const auto& p = std::get<PerturbedDshgParams>(inst.params);
            q.log_abs = -p.xi / 2 * std::cosh(2 * x) + p.alpha * log_cosh(x);
            if (p.beta != 0) {
                const Real sh = std::sinh(x);
                if (sh == 0) {
                    q.sign = 0;
                } else {
                    q.log_abs += p.beta * std::log(std::fabs(sh));
                    if (sh < 0) {
                        if (!is_integer(p.beta)) throw Error(ErrorKind::DomainError, "sinh^beta undefined for x < 0");
                        if (static_cast<long long>(p.beta) % 2 != 0) q.sign = -q.sign;
                    }
                }
            }
            break;
        }
    }
    return q;
}

Real ansatz_prefactor(const ModelInstance& inst, Real x, Real scan_value) {
    SignedLog q = ansatz_log(inst, x, scan_value);
    return q.sign == 0 ? 0 : q.sign * std::exp(q.log_abs);
}

Real potential(const ModelInstance& inst, Real x, Real scan_value) {
    switch (inst.id) {
        case ModelId::XieEven:
        case ModelId::XieOdd: {
            const auto& p = std::get<XieParams>(inst.params);
            const Real s2 = 1 / sq(std::cosh(x));
            return -p.V1 * s2 * s2 * s2 - p.V2 * s2 * s2 - scan_value * s2;
        }
        case ModelId::ChenEven:
        case ModelId::ChenOdd: {
            const auto& p = std::get<ChenParams>(inst.params);
            const Real c2 = sq(std::cosh(x)), den = 1 + p.g * c2;
            return p.V1 / c2 + scan_value / den + p.V3 / (den * den);
        }
        case ModelId::CoulombMagnetic: {
            if (!(x > 0)) throw Error(ErrorKind::DomainError, "Coulomb potential needs x > 0");
            const Real lam = std::get<CoulombParams>(inst.params).lambda;
            return lam * (lam - 1) / (x * x) + x * x / 4 - scan_value / x;
        }
        case ModelId::Razavy: {
            const Real xi = std::get<RazavyParams>(inst.params).xi, M = model_M(inst);
            return xi * xi / 4 * sq(std::sinh(2 * x)) - (M + 1) * xi * std::cosh(2 * x);
        }
        case ModelId::Dshg: {
            const Real xi = std::get<DshgParams>(inst.params).xi;
            return sq(xi * std::cosh(2 * x) - model_M(inst));
        }
        case ModelId::PerturbedDshg: {
            const auto& p = std::get<PerturbedDshgParams>(inst.params);
            Real v = sq(p.xi * std::cosh(2 * x) - model_M(inst)) - p.g_term() / sq(std::cosh(x));
            if (p.h_term() != 0) {
                if (x == 0) throw Error(ErrorKind::DomainError, "h(h+1)/sinh^2 x is singular at 0");
                v += p.h_term() / sq(std::sinh(x));
            }
            return v;
        }
    }
    return 0;
}

std::vector<ModelSchema> catalog() {
    const std::string n_note = "n >= 0 (integer baseline index)";
    return {
        {"xie-even", "V3", {{"V1", "V1 > 0", 1.0}, {"V2", "normalizable iff V2 < -[(4n+3) sqrt(V1) + V1]", -50.0}},
         "V = -V1 sech^6 - V2 sech^4 - V3 sech^2; even parity; " + n_note},
        {"xie-odd", "V3", {{"V1", "V1 > 0", 1.0}, {"V2", "normalizable iff V2 < -[(4n+5) sqrt(V1) + V1]", -50.0}},
         "odd parity partner of xie-even"},
        {"chen-even", "V2", {{"V1", "V1 <= 1/4", 0.09}, {"V3", "V3/(1+g) >= -1", 400.0}, {"g", "g > 0", 0.25}},
         "V = V1/cosh^2 + V2/(1+g cosh^2) + V3/(1+g cosh^2)^2; normalizable iff lambda1+lambda2+n < 0"},
        {"chen-odd", "V2", {{"V1", "V1 <= 1/4", 0.09}, {"V3", "V3/(1+g) >= -1", 400.0}, {"g", "g > 0", 0.25}},
         "odd parity; normalizable iff lambda1+lambda2+n < -1/2"},
        {"coulomb", "beta", {{"lambda", "lambda > -1/2", 0.5}, {"omega", "omega > 0", 1.0}},
         "-u'' + [lambda(lambda-1)/x^2 + x^2/4 - beta/x] u = (alpha/omega) u on x > 0, beta in rescaled units"},
        {"razavy", "E", {{"xi", "xi > 0", 0.5}, {"alpha", "alpha in {0,1}", 0.0}, {"beta", "beta in {0,1}", 1.0}, {"M", "optional; M = 2n+alpha+beta", std::nullopt}},
         "V = xi^2/4 sinh^2 2x - (M+1) xi cosh 2x, variable z = cosh^2 x"},
        {"razavy-sinh2", "E", {{"xi", "xi > 0", 0.5}, {"alpha", "alpha in {0,1}", 0.0}, {"beta", "beta in {0,1}", 1.0}, {"M", "optional; M = 2n+alpha+beta", std::nullopt}},
         "razavy with variable z = sinh^2 x (same spectrum)"},
        {"dshg", "E", {{"xi", "xi > 0", 2.0}, {"M", "optional; M = n+1", std::nullopt}},
         "V = (xi cosh 2x - M)^2, variable z = e^{2x}"},
        {"perturbed-dshg", "E",
         {{"xi", "xi > 0", 2.0}, {"alpha", "alpha(alpha-1) = g(g+1)", 2.0}, {"beta", "beta(beta-1) = h(h+1) in (-1/4, 0]", 0.0}, {"M", "optional; M = 2n+alpha+beta+1", std::nullopt}},
         "DSHG - g(g+1)/cosh^2 + h(h+1)/sinh^2; (alpha, beta) selects one member of the quadruplet alpha in {g+1, -g}, beta in {h+1, -h}"},
        {"perturbed-dshg-sinh2", "E",
         {{"xi", "xi > 0", 2.0}, {"alpha", "alpha(alpha-1) = g(g+1)", 2.0}, {"beta", "beta(beta-1) = h(h+1) in (-1/4, 0]", 0.0}, {"M", "optional; M = 2n+alpha+beta+1", std::nullopt}},
         "perturbed-dshg with variable z = sinh^2 x (same spectrum); quadruplet selected by (alpha, beta)"},
    };
}

}  // namespace qes
