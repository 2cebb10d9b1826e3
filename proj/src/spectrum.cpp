#include "qes/spectrum.hpp"

#include <cmath>

#include "qes/baseline.hpp"
#include "qes/wavefunction.hpp"

namespace qes {

Pipeline run_pipeline(const ModelInstance& inst) {
    Pipeline p;
    p.sys = build_baseline(inst);
    p.chain = run_ttrr(p.sys);
    p.ttrr = to_canonical_ttrr(p.sys);
    p.roots = real_roots(p.ttrr, p.chain.constraint);
    return p;
}

SpectrumResult solve_spectrum(const ModelInstance& inst, const SolveOptions& opts) {
    Pipeline p = run_pipeline(inst);
    SpectrumResult res;
    res.inst = inst;
    res.baseline = static_cast<double>(p.sys.baseline_value);
    res.baseline_label = p.sys.baseline_label;
    res.min_lambda = static_cast<double>(p.ttrr.min_lambda());
    res.sign_variant = p.ttrr.sign_variant;

    for (Real r : p.roots.precise) {
        RootEntry e;
        e.scan_value = static_cast<double>(r);
        e.energy = static_cast<double>(energy(inst, r));
        e.normalizable = normalizable(inst, r);
        if (inst.id == ModelId::XieEven || inst.id == ModelId::XieOdd) e.double_well = double_well_flag(inst, e.scan_value);
        // P_nn(root) is the constant term of S_n relative to its monic top
        Polynomial s = assemble_solution(p.chain, r);
        if (inst.n > 0 && std::fabs(s.coeffs[0]) <= 1e-12L * s.max_abs_coeff()) res.p_nn_zero = true;

        if (opts.nodes || opts.verify) {
            if (opts.nodes) e.node_count = sample_default(inst, s, r, 4001).node_count;
            if (opts.verify) {
                FdConfig cfg = default_fd_config(inst, s, r);
                WavefunctionGrid g = sample_at(inst, s, r, fd_points(inst, cfg));
                e.verification = verify_root(inst, e.scan_value, e.energy, g, cfg);
            }
        }
        res.roots.push_back(e);
    }
    return res;
}

}  // namespace qes
