#pragma once

#include <vector>

#include "detrep/fieldmatrix.hpp"
#include "detrep/gradedmod.hpp"
#include "detrep/poly.hpp"

namespace detrep {

// A degree-0 map of graded free modules, given by a grid of homogeneous
// entries: entry (p, q) maps R(-source.twists[q]) -> R(-target.twists[p]) and
// is zero or homogeneous of degree source.twists[q] - target.twists[p].
struct HomogMatrix {
    GradedFreeModule source;
    GradedFreeModule target;
    std::vector<std::vector<HomogPoly>> entries; // [target rank][source rank]
    int n_vars = 0;

    static HomogMatrix zeros(const GradedFreeModule& tgt, const GradedFreeModule& src,
                             int n_vars);

    const HomogPoly& at(int p, int q) const { return entries[(size_t)p][(size_t)q]; }
    void set(int p, int q, HomogPoly f);

    bool degrees_consistent() const;
    bool is_zero() const;

    // Transpose with negated twists: the R-dual map tgt^*(s) <- src^*(s).
    HomogMatrix dual(int extra_twist) const;

    // Both modules twisted by s; entries unchanged.
    HomogMatrix twisted(int s) const;
};

// Entrywise composition a o b (matrix product with poly_mul).
HomogMatrix compose(const HomogMatrix& a, const HomogMatrix& b, const PrimeField& F);

// The degree-nu component of m as a plain matrix in the monomial bases:
// rows indexed by (target summand, monomial), columns by (source summand,
// monomial), blocks are multiplication by the entries.
FieldMatrix graded_piece(const HomogMatrix& m, int nu, const PrimeField& F);

// Identity map on f.
HomogMatrix identity_matrix(const GradedFreeModule& f, int n_vars, const PrimeField& F);

// Substitute the last variable by a generic linear form in all entries
// (hyperplane cut); modules keep their twists, n_vars drops by one.
HomogMatrix cut_last_var(const HomogMatrix& m, const std::vector<uint32_t>& lambda,
                         const PrimeField& F);

} // namespace detrep
