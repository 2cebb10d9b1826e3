#pragma once

#include <cmath>
#include <vector>

#include "qes/models.hpp"

namespace fx {

using qes::ModelId;
using qes::ModelInstance;
using qes::VariableVariant;

inline ModelInstance make(ModelId id, qes::ModelParams p, int n, VariableVariant v = VariableVariant::Native) {
    ModelInstance inst;
    inst.id = id;
    inst.variant = v;
    inst.params = p;
    inst.n = n;
    return inst;
}

inline ModelInstance xie(bool even, int n = 10, double V1 = 1, double V2 = -50) {
    return make(even ? ModelId::XieEven : ModelId::XieOdd, qes::XieParams{V1, V2}, n);
}
inline ModelInstance chen(bool even, int n = 7) {
    return make(even ? ModelId::ChenEven : ModelId::ChenOdd, qes::ChenParams{0.09L, 400, 0.25L}, n);
}
inline ModelInstance coulomb(int n = 10, double lambda = 0.5) {
    return make(ModelId::CoulombMagnetic, qes::CoulombParams{lambda, 1}, n);
}
inline ModelInstance razavy(VariableVariant v = VariableVariant::CoshSq, int n = 10) {
    return make(ModelId::Razavy, qes::RazavyParams{0.5L, 0, 1}, n, v);
}
inline ModelInstance dshg(int n = 11) { return make(ModelId::Dshg, qes::DshgParams{2}, n); }
inline ModelInstance pdshg(double a, double b, int n = 11, VariableVariant v = VariableVariant::CoshSq) {
    return make(ModelId::PerturbedDshg, qes::PerturbedDshgParams{2, a, b}, n, v);
}

// reference roots, recomputed at 50 digits from the same recurrences
inline const std::vector<double> kXieEven = {50.6498736146, 62.9911501847, 85.0160202017, 117.498621373,
                                             158.650341487, 208.125925071, 265.779942993, 331.540201588,
                                             405.367517246, 487.239162839, 577.141243404};
inline const std::vector<double> kXieOdd = {38.8277474482, 58.8255756927, 83.2711885896, 116.334644301,
                                            157.818620255, 207.504329798, 265.298956666, 331.157576526,
                                            405.056216298, 486.981136022, 576.924008404};
inline const std::vector<double> kChenEven = {-378.075071112, -346.333659665, -325.891778237, -306.113224477,
                                              -272.536400313, -228.952744914, -176.075141605, -114.077793932};
inline const std::vector<double> kChenOdd = {-374.928662313, -342.81156789, -316.597345953, -287.269458066,
                                             -248.488774932, -200.235654596, -142.791659183, -76.2691254468};
inline const std::vector<double> kCoulomb = {-24.8501851103, -18.6760134234, -13.0011725039, -7.89603149212,
                                             -3.50671110793, 0, 3.50671110793, 7.89603149212,
                                             13.0011725039, 18.6760134234, 24.8501851103};
inline const std::vector<double> kRazavy = {-441.065625135, -361.073264584, -289.08376957, -225.098778748,
                                            -169.121298872, -121.157354145, -81.2205565247, -49.347599513,
                                            -25.6451547195, -9.23983200324, 6.55323381312};
inline const std::vector<double> kDshg = {22.5949469113, 22.5949681752, 61.3442522668, 61.3580546887,
                                          89.8744853668, 91.2808151738, 106.478216232, 117.007641478,
                                          131.616572063, 147.980766162, 166.09152716, 185.777754322};
inline const std::vector<double> kPdshgEven = {48.5067398201, 140.03876536, 223.424799258, 298.595893411,
                                               365.434913617, 423.724878347, 472.986919631, 511.035299139,
                                               534.417930254, 566.233411678, 609.074835669, 658.525613816};
inline const std::vector<double> kPdshgOdd = {50.5262266528, 146.082574676, 233.507380657, 312.742091813,
                                              383.690146364, 446.18025366, 499.874293414, 544.126348599,
                                              580.22160885, 617.351921873, 661.545574415, 712.151579026};

inline double max_rel_dev(const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) return INFINITY;
    double worst = 0;
    for (size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::fabs(got[i] - want[i]) / std::max(1.0, std::fabs(want[i])));
    return worst;
}

}  // namespace fx
