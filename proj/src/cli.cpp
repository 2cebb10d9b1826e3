#include "qes/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qes/baseline.hpp"
#include "qes/errors.hpp"
#include "qes/spectrum.hpp"
#include "qes/wavefunction.hpp"

namespace qes {

namespace {

using json = nlohmann::ordered_json;

std::string num(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_json(const json& j, std::string& out, int depth) {
    const std::string pad(2 * (depth + 1), ' '), end_pad(2 * depth, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad + json(it.key()).dump() + ": ";
                write_json(it.value(), out, depth + 1);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            out += end_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad;
                write_json(j[i], out, depth + 1);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            out += end_pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += num(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

struct Request {
    std::string model;
    std::optional<int> n;
    std::vector<std::string> params;
    std::string scan_var;
    std::string range;
    int root_index = 0;
    std::optional<double> xmin, xmax;
    std::optional<int> points;
    std::optional<double> grid_l;
    int grid_points = 2001;
    std::string format = "json";
    std::string out;
    bool nodes = false;
    bool verify = false;
};

class ParamBag {
public:
    explicit ParamBag(const std::vector<std::string>& kv) {
        for (const auto& item : kv) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidParams, "expected key=value, got '" + item + "'");
            std::string key = item.substr(0, eq), val = item.substr(eq + 1);
            double v;
            try {
                size_t used = 0;
                v = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidParams, "not a number: '" + item + "'");
            }
            if (!values_.emplace(key, v).second) throw Error(ErrorKind::InvalidParams, "parameter given twice: " + key);
        }
    }
    double need(const std::string& key) {
        auto v = take(key);
        if (!v) throw Error(ErrorKind::InvalidParams, "missing parameter " + key);
        return *v;
    }
    std::optional<double> take(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        double v = it->second;
        values_.erase(it);
        return v;
    }
    void forbid_scan(const std::string& key) {
        if (values_.count(key)) throw Error(ErrorKind::InvalidParams, key + " is the scan variable of this model and cannot be fixed");
    }
    void finish() const {
        if (!values_.empty()) throw Error(ErrorKind::InvalidParams, "unknown parameter " + values_.begin()->first);
    }

private:
    std::map<std::string, double> values_;
};

int as_small_int(double v, const std::string& what) {
    if (v != std::floor(v) || std::fabs(v) > 1e6) throw Error(ErrorKind::InvalidParams, what + " must be an integer");
    return static_cast<int>(v);
}

ModelInstance make_instance(const Request& rq) {
    auto [id, variant] = parse_model_name(rq.model);
    ModelInstance inst;
    inst.id = id;
    inst.variant = variant;
    if (!rq.scan_var.empty() && rq.scan_var != scan_variable(id))
        throw Error(ErrorKind::InvalidParams, "scan variable of " + rq.model + " is " + scan_variable(id));

    ParamBag bag(rq.params);
    bag.forbid_scan(scan_variable(id));
    std::optional<double> M;
    Real m_offset = 0;  // M = 2n + m_offset (n + 1 for dshg)
    switch (id) {
        case ModelId::XieEven:
        case ModelId::XieOdd:
            inst.params = XieParams{bag.need("V1"), bag.need("V2")};
            break;
        case ModelId::ChenEven:
        case ModelId::ChenOdd:
            inst.params = ChenParams{bag.need("V1"), bag.need("V3"), bag.need("g")};
            break;
        case ModelId::CoulombMagnetic:
            inst.params = CoulombParams{bag.need("lambda"), bag.take("omega").value_or(1.0)};
            break;
        case ModelId::Razavy: {
            RazavyParams p{bag.need("xi"), as_small_int(bag.need("alpha"), "alpha"), as_small_int(bag.need("beta"), "beta")};
            m_offset = p.alpha + p.beta;
            inst.params = p;
            M = bag.take("M");
            break;
        }
        case ModelId::Dshg:
            inst.params = DshgParams{bag.need("xi")};
            M = bag.take("M");
            break;
        case ModelId::PerturbedDshg: {
            PerturbedDshgParams p{bag.need("xi"), bag.need("alpha"), bag.need("beta")};
            m_offset = p.alpha + p.beta + 1;
            inst.params = p;
            M = bag.take("M");
            break;
        }
    }
    bag.finish();

    if (rq.n) {
        inst.n = *rq.n;
    } else if (M) {
        Real nn = id == ModelId::Dshg ? *M - 1 : (*M - m_offset) / 2;
        if (nn < 0 || nn != std::floor(nn))
            throw Error(ErrorKind::BaselineUnsolvable, "M does not correspond to a nonnegative integer baseline");
        inst.n = static_cast<int>(nn);
    } else {
        throw Error(ErrorKind::InvalidParams, "--n is required");
    }
    validate(inst);
    if (M && std::fabs(model_M(inst) - *M) > 1e-12L * (1 + std::fabs(*M)))
        throw Error(ErrorKind::BaselineUnsolvable, "M is inconsistent with n on this baseline");
    return inst;
}

json params_json(const ModelInstance& inst) {
    json p = json::object();
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, XieParams>) {
                p["V1"] = double(v.V1);
                p["V2"] = double(v.V2);
            } else if constexpr (std::is_same_v<T, ChenParams>) {
                p["V1"] = double(v.V1);
                p["V3"] = double(v.V3);
                p["g"] = double(v.g);
                p["lambda1"] = double(v.lambda1());
                p["lambda2"] = double(v.lambda2());
            } else if constexpr (std::is_same_v<T, CoulombParams>) {
                p["lambda"] = double(v.lambda);
                p["omega"] = double(v.omega);
            } else if constexpr (std::is_same_v<T, RazavyParams>) {
                p["xi"] = double(v.xi);
                p["alpha"] = v.alpha;
                p["beta"] = v.beta;
                p["M"] = double(model_M(inst));
            } else if constexpr (std::is_same_v<T, DshgParams>) {
                p["xi"] = double(v.xi);
                p["M"] = double(model_M(inst));
            } else {
                p["xi"] = double(v.xi);
                p["alpha"] = double(v.alpha);
                p["beta"] = double(v.beta);
                p["M"] = double(model_M(inst));
                p["g(g+1)"] = double(v.g_term());
                p["h(h+1)"] = double(v.h_term());
            }
        },
        inst.params);
    return p;
}

json report_json(const VerificationReport& r) {
    json j;
    j["algebraic_E"] = r.algebraic_E;
    j["nearest_fd_E"] = r.nearest_fd_E;
    j["abs_gap"] = r.abs_gap;
    j["refined_gap"] = r.refined_gap;
    j["residual"] = r.residual;
    j["converged"] = r.converged;
    j["ambiguous"] = r.ambiguous;
    return j;
}

json spectrum_json(const SpectrumResult& s) {
    json j;
    j["model"] = model_name(s.inst.id, s.inst.variant);
    j["params"] = params_json(s.inst);
    j["n"] = s.inst.n;
    j["scan_variable"] = scan_variable(s.inst.id);
    j["baseline"] = s.baseline;
    j["baseline_label"] = s.baseline_label;
    json roots = json::array();
    for (const auto& e : s.roots) {
        json r;
        r["scan_value"] = e.scan_value;
        r["energy"] = e.energy;
        r["normalizable"] = e.normalizable;
        if (e.double_well) r["double_well"] = *e.double_well;
        if (s.inst.id == ModelId::CoulombMagnetic) {
            double w = static_cast<double>(std::get<CoulombParams>(s.inst.params).omega);
            r["physical_beta"] = e.scan_value * std::sqrt(w / 2);
            r["alpha"] = e.energy * w;
        }
        if (e.node_count) r["node_count"] = *e.node_count;
        if (e.verification) r["verification"] = report_json(*e.verification);
        roots.push_back(r);
    }
    j["roots"] = roots;
    j["chain"] = {{"p_nn_zero_flag", s.p_nn_zero},
                  {"min_lambda", s.min_lambda},
                  {"sign_variant", s.sign_variant == SignVariant::Plus ? "plus" : "minus"}};
    return j;
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) line += (line.empty() ? "" : ",") + c;
    return line + "\n";
}

std::string b(bool v) { return v ? "true" : "false"; }

void emit(const Request& rq, const std::string& text, std::ostream& out) {
    if (rq.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(rq.out);
    if (!f) throw Error(ErrorKind::InvalidParams, "cannot write " + rq.out);
    f << text;
}

std::string render(const Request&, const json& j) {
    std::string s;
    write_json(j, s, 0);
    return s + "\n";
}

std::string cmd_models(const Request& rq) {
    auto cat = catalog();
    if (rq.format == "csv") {
        std::string s = csv_row({"id", "scan_variable", "param", "constraint", "default"});
        for (const auto& m : cat)
            for (const auto& p : m.params)
                s += csv_row({m.id, m.scan_variable, p.name, "\"" + p.constraint + "\"", p.default_value ? num(*p.default_value) : ""});
        return s;
    }
    json arr = json::array();
    for (const auto& m : cat) {
        json ps = json::array();
        for (const auto& p : m.params) {
            json pj;
            pj["name"] = p.name;
            pj["constraint"] = p.constraint;
            pj["default"] = p.default_value ? json(*p.default_value) : json(nullptr);
            ps.push_back(pj);
        }
        arr.push_back({{"id", m.id}, {"scan_variable", m.scan_variable}, {"params", ps}, {"note", m.note}});
    }
    return render(rq, arr);
}

std::string cmd_constraint(const Request& rq) {
    ModelInstance inst = make_instance(rq);
    if (rq.range.empty()) throw Error(ErrorKind::InvalidParams, "--range min:max:steps is required");
    double lo, hi;
    int steps;
    char c1, c2;
    std::istringstream is(rq.range);
    if (!(is >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 2 || !(hi > lo))
        throw Error(ErrorKind::InvalidParams, "bad --range, expected min:max:steps with steps >= 2");
    Pipeline p;
    p.sys = build_baseline(inst);
    p.chain = run_ttrr(p.sys);
    const double scale = std::ldexp(1.0, p.chain.log2_scale);
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i < steps; ++i) {
        double x = lo + (hi - lo) * i / (steps - 1);
        rows.emplace_back(x, static_cast<double>(poly_eval(p.chain.constraint, x)) * scale);
    }
    if (rq.format == "csv") {
        std::string s = csv_row({"scan_value", "constraint"});
        for (auto [x, v] : rows) s += csv_row({num(x), num(v)});
        return s;
    }
    json j;
    j["model"] = rq.model;
    j["n"] = inst.n;
    j["scan_variable"] = scan_variable(inst.id);
    json arr = json::array();
    for (auto [x, v] : rows) arr.push_back({{"scan_value", x}, {"constraint", v}});
    j["rows"] = arr;
    return render(rq, j);
}

std::string cmd_roots(const Request& rq) {
    ModelInstance inst = make_instance(rq);
    SpectrumResult s = solve_spectrum(inst, {rq.nodes, rq.verify});
    if (rq.format == "csv") {
        std::string out = csv_row({"index", "scan_value", "energy", "normalizable", "double_well", "node_count"});
        for (size_t i = 0; i < s.roots.size(); ++i) {
            const auto& e = s.roots[i];
            out += csv_row({std::to_string(i), num(e.scan_value), num(e.energy), b(e.normalizable),
                            e.double_well ? b(*e.double_well) : "", e.node_count ? std::to_string(*e.node_count) : ""});
        }
        return out;
    }
    return render(rq, spectrum_json(s));
}

std::string cmd_wavefunction(const Request& rq) {
    ModelInstance inst = make_instance(rq);
    Pipeline p = run_pipeline(inst);
    if (rq.root_index < 0 || rq.root_index >= static_cast<int>(p.roots.roots.size()))
        throw Error(ErrorKind::InvalidParams, "--root-index out of range");
    const Real r = p.roots.precise[rq.root_index];
    Polynomial s = assemble_solution(p.chain, r);
    WavefunctionGrid g;
    if (rq.xmin || rq.xmax) {
        if (!rq.xmin || !rq.xmax) throw Error(ErrorKind::InvalidParams, "--xmin and --xmax go together");
        g = sample(inst, s, r, *rq.xmin, *rq.xmax, rq.grid_points);
    } else if (rq.grid_l) {
        if (half_line(inst)) {
            std::vector<double> xs(rq.grid_points);
            for (int i = 0; i < rq.grid_points; ++i) xs[i] = *rq.grid_l * (i + 1) / rq.grid_points;
            g = sample_at(inst, s, r, xs);
        } else {
            g = sample(inst, s, r, -*rq.grid_l, *rq.grid_l, rq.grid_points);
        }
    } else {
        g = sample_default(inst, s, r, rq.grid_points);
    }
    if (rq.format == "csv") {
        std::string out = csv_row({"x", "psi"});
        for (size_t i = 0; i < g.xs.size(); ++i) out += csv_row({num(g.xs[i]), num(g.psi[i])});
        return out;
    }
    json j;
    j["model"] = model_name(inst.id, inst.variant);
    j["n"] = inst.n;
    j["scan_value"] = r;
    j["energy"] = static_cast<double>(energy(inst, r));
    j["node_count"] = g.node_count;
    j["parity"] = g.parity == Parity::Even ? "even" : g.parity == Parity::Odd ? "odd" : "none";
    j["x"] = g.xs;
    j["psi"] = g.psi;
    return render(rq, j);
}

constexpr double kGapLimit = 1e-3;
constexpr double kResidualLimit = 1e-4;

std::string cmd_verify(const Request& rq, bool& failed) {
    ModelInstance inst = make_instance(rq);
    Pipeline p = run_pipeline(inst);
    json reports = json::array();
    std::string csv = csv_row({"scan_value", "energy", "nearest_fd_E", "abs_gap", "refined_gap", "residual", "converged"});
    failed = false;
    for (Real r : p.roots.precise) {
        Polynomial s = assemble_solution(p.chain, r);
        FdConfig cfg = default_fd_config(inst, s, r);
        if (rq.xmin) cfg.xmin = *rq.xmin;
        if (rq.xmax) cfg.xmax = *rq.xmax;
        if (rq.points) cfg.points = *rq.points;
        const double e = static_cast<double>(energy(inst, r));
        WavefunctionGrid g = sample_at(inst, s, r, fd_points(inst, cfg));
        VerificationReport rep = verify_root(inst, r, e, g, cfg);
        failed = failed || !(rep.abs_gap < kGapLimit) || !(rep.residual < kResidualLimit);
        json j;
        j["scan_value"] = r;
        j["energy"] = e;
        json body = report_json(rep);
        for (auto& [k, v] : body.items()) j[k] = v;
        reports.push_back(j);
        csv += csv_row({num(r), num(e), num(rep.nearest_fd_E), num(rep.abs_gap), num(rep.refined_gap), num(rep.residual),
                        b(rep.converged)});
    }
    if (rq.format == "csv") return csv;
    json j;
    j["model"] = model_name(inst.id, inst.variant);
    j["n"] = inst.n;
    j["reports"] = reports;
    return render(rq, j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algebraic spectra of quasi-exactly solvable potentials"};
    app.require_subcommand(1);
    Request rq;

    auto add_model_opts = [&](CLI::App* sc) {
        sc->add_option("--model", rq.model, "model id (see `models`)")->required();
        sc->add_option("--n", rq.n, "baseline index");
        sc->add_option("--param", rq.params, "key=value, repeatable");
        sc->add_option("--scan-var", rq.scan_var, "scan variable (fixed per model)");
    };
    auto add_output_opts = [&](CLI::App* sc) {
        sc->add_option("--format", rq.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sc->add_option("--out", rq.out, "output path (default stdout)");
    };

    auto* models = app.add_subcommand("models", "list the model catalog");
    add_output_opts(models);

    auto* constraint = app.add_subcommand("constraint", "tabulate the constraint polynomial");
    add_model_opts(constraint);
    add_output_opts(constraint);
    constraint->add_option("--range", rq.range, "min:max:steps");

    auto* roots = app.add_subcommand("roots", "roots of the constraint polynomial and their energies");
    add_model_opts(roots);
    add_output_opts(roots);
    roots->add_flag("--nodes", rq.nodes, "count nodes of each eigenfunction");
    roots->add_flag("--verify", rq.verify, "attach finite-difference verification");

    auto* wave = app.add_subcommand("wavefunction", "sample the eigenfunction of one root");
    add_model_opts(wave);
    add_output_opts(wave);
    wave->add_option("--root-index", rq.root_index, "index into the ascending roots");
    wave->add_option("--grid-l", rq.grid_l, "sample on [-L, L] ((0, L] on the half line)");
    wave->add_option("--grid-points", rq.grid_points, "number of samples")->check(CLI::Range(3, 10000000));
    wave->add_option("--xmin", rq.xmin, "explicit left end");
    wave->add_option("--xmax", rq.xmax, "explicit right end");

    auto* verify = app.add_subcommand("verify", "check every root against a finite-difference eigensolver");
    add_model_opts(verify);
    add_output_opts(verify);
    verify->add_option("--xmin", rq.xmin, "FD domain left end");
    verify->add_option("--xmax", rq.xmax, "FD domain right end");
    verify->add_option("--points", rq.points, "FD interior points");

    std::vector<std::string> argv_store = {"qes"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*models) emit(rq, cmd_models(rq), out);
        else if (*constraint) emit(rq, cmd_constraint(rq), out);
        else if (*roots) emit(rq, cmd_roots(rq), out);
        else if (*wave) emit(rq, cmd_wavefunction(rq), out);
        else if (*verify) {
            bool failed = false;
            emit(rq, cmd_verify(rq, failed), out);
            if (failed) {
                err << "verification failed for at least one root\n";
                return exit_code(ErrorKind::VerificationFailed);
            }
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace qes
