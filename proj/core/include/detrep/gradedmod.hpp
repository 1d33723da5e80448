#pragma once

#include <vector>

#include "detrep/combin.hpp"

namespace detrep {

// A graded free module  F = (+)_q R(-u_q), stored by its list of twists u_q.
struct GradedFreeModule {
    std::vector<int> twists;

    int rank() const { return (int)twists.size(); }

    // dim of the degree-nu piece: sum_q dim R_{nu - u_q}.
    long long piece_dim(int nu, int n_vars) const {
        long long s = 0;
        for (int u : twists)
            if (nu >= u) s += binom(n_vars - 1 + nu - u, n_vars - 1);
        return s;
    }

    // R-dual followed by a twist: Hom(R(-u), R)(extra) = R(-(-u - extra)).
    GradedFreeModule dual(int extra_twist) const {
        GradedFreeModule d;
        d.twists.reserve(twists.size());
        for (int u : twists) d.twists.push_back(-u - extra_twist);
        return d;
    }

    // F(s): R(-u)(s) = R(-(u - s)).
    GradedFreeModule twisted(int s) const {
        GradedFreeModule t;
        t.twists.reserve(twists.size());
        for (int u : twists) t.twists.push_back(u - s);
        return t;
    }

    bool operator==(const GradedFreeModule&) const = default;
};

// dim of degree-nu piece of  (+)_q R(-u_q)  (free-standing form).
inline long long hilbert_dim(const GradedFreeModule& f, int nu, int n_vars) {
    return f.piece_dim(nu, n_vars);
}

} // namespace detrep
