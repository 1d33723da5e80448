#include "detrep/extengine.hpp"

#include <stdexcept>

namespace detrep {

long long ext_R_dim(const GradedComplex& res, int twist, int i, int nu, const PrimeField& F) {
    if (res.cochain) throw std::logic_error("ext_R_dim: expected a chain complex (resolution)");
    if (i < 0) throw std::out_of_range("ext_R_dim: i >= 0 required");
    if (i > res.length()) return 0;
    GradedComplex dual = dualize(res, twist);
    return homology_dim(dual, i, nu, F);
}

long long ext_M_Mdual(const DeterminantalModel& model, int j, int i, int mu_used) {
    if (j < 0 || j > model.dm.c) throw std::out_of_range("ext_M_Mdual: 0 <= j <= c required");
    GradedComplex res = build_C(model, j + model.dm.c);
    return ext_R_dim(res, mu_used - model.dm.ell(), i + model.dm.c, 0, model.field);
}

long long hom_Mdual_M(const DeterminantalModel& model, int s) {
    GradedComplex res = model.dm.c >= 2 ? build_D(model, 2) : build_C(model, 2);
    return coker_hilbert(res, -s, model.field);
}

long long ext_L2_L1(const DeterminantalModel& model, int i, int nu) {
    if (nu < -model.dim_x())
        throw std::out_of_range("ext_L2_L1: nu >= -dim X required (isomorphism bound)");
    GradedComplex res = build_C(model, 2 * model.dm.c);
    return ext_R_dim(res, -model.dm.c, i + model.dm.c, nu, model.field);
}

long long chi_oracle(const DeterminantalModel& model, int nu) {
    if (model.dim_x() < 2) throw std::invalid_argument("chi_oracle: dim X >= 2 required");
    return ext_L2_L1(model, 0, nu) - ext_L2_L1(model, 1, nu) + ext_L2_L1(model, 2, nu);
}

long long hom_L1_L2(const DeterminantalModel& model) {
    GradedComplex res = build_C(model, model.dm.c + 1);
    return euler_characteristic(res, 1 - model.dm.t);
}

} // namespace detrep
