#include "qes/baseline.hpp"

namespace qes {

BaselineSystem build_baseline(const ModelInstance& inst) {
    validate(inst);
    BaselineSystem sys;
    sys.n = inst.n;
    sys.ode = ode_template(inst);
    sys.mult = multiplicators(inst);
    sys.scan_variable = scan_variable(inst.id);
    sys.baseline_label = baseline_label(inst.id);
    sys.baseline_value = baseline_value(inst);
    check_baseline(sys);
    return sys;
}

}  // namespace qes
