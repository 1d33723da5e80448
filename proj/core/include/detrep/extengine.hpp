#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detrep/complexes.hpp"

namespace detrep {

// dim of the degree-nu piece of Ext^i_R(N, R(twist)) computed as homology of
// the twisted dual of a free resolution of N. Positions beyond the resolution
// length give 0.
long long ext_R_dim(const GradedComplex& res, int twist, int i, int nu, const PrimeField& F);

// dim _0 Ext^i_A(S_jM, M^dual(mu_used)) via the reduction to
// _0 Ext^{i+c}_R(S_{j+c}M, R(mu_used - ell)), resolved by C_{j+c}(phi).
long long ext_M_Mdual(const DeterminantalModel& model, int j, int i, int mu_used);

// dim _0 Hom(M^dual(s), M) = dim (S_2M)_{-s}, from the presentation of S_2M.
long long hom_Mdual_M(const DeterminantalModel& model, int s);

// dim Ext^i(L_2, L_1(nu)) on X via _nu Ext^{i+c}_R(S_{2c}M(c), R); valid only
// for nu >= -dim X (throws std::out_of_range below that bound).
long long ext_L2_L1(const DeterminantalModel& model, int i, int nu);

// ext^0 - ext^1 + ext^2 for the pair (L_2, L_1(nu)); requires dim X >= 2.
long long chi_oracle(const DeterminantalModel& model, int nu);

// dim (S_{c+1}M)_{1-t} via the Euler characteristic of C_{c+1}; this is
// Hom(L_1, L_2) in degree 0 for the linear case.
long long hom_L1_L2(const DeterminantalModel& model);

// Seed-stability wrapper: evaluates f at `retries` consecutive seeds and
// reports the modal value. Seeds disagreeing with the mode are flagged; no
// strict majority means degenerate-seed exhaustion.
struct ModalResult {
    long long value = 0;
    bool unanimous = true;
    bool majority = true;
    std::vector<uint64_t> outlier_seeds;
};

template <typename F>
ModalResult modal_over_seeds(uint64_t seed, int retries, F&& eval) {
    ModalResult r;
    std::map<long long, std::vector<uint64_t>> votes;
    for (int k = 0; k < retries; ++k) {
        uint64_t s = seed + (uint64_t)k;
        votes[eval(s)].push_back(s);
    }
    size_t best = 0;
    for (const auto& [v, seeds] : votes)
        if (seeds.size() > best) {
            best = seeds.size();
            r.value = v;
        }
    r.unanimous = votes.size() == 1;
    r.majority = 2 * best > (size_t)retries;
    for (const auto& [v, seeds] : votes)
        if (v != r.value)
            for (uint64_t s : seeds) r.outlier_seeds.push_back(s);
    return r;
}

} // namespace detrep
