#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detrep/gf.hpp"

namespace detrep {

// A matrix over GF(p) realizing one graded piece of a homogeneous map.
// Small pieces are dense row-major; large ones switch to row-sparse storage
// (rows of sorted (col, val) pairs). The switch threshold follows the
// rows*cols budget below.
struct FieldMatrix {
    long long rows = 0;
    long long cols = 0;
    PrimeField F;
    bool sparse = false;
    std::vector<uint32_t> dense;                                  // if !sparse
    std::vector<std::vector<std::pair<int, uint32_t>>> row_data;  // if sparse

    static constexpr long long kDenseBudget = 4'000'000; // entries

    static FieldMatrix zeros(long long r, long long c, const PrimeField& F);

    uint32_t at(long long r, long long c) const;
    void add_at(long long r, long long c, uint32_t v); // accumulate mod p

    void finalize(); // sort sparse rows, drop zeros

    FieldMatrix transposed() const;
};

long long rank(const FieldMatrix& m);
long long kernel_dim(const FieldMatrix& m);

// Dense-only helpers for the small exact-linear-algebra layer.

// Basis of the right nullspace (each vector length = cols).
std::vector<std::vector<uint32_t>> nullspace(const FieldMatrix& m);

// Incremental row-echelon structure over GF(p): insert vectors, keep an
// independent reduced set. Used for span/quotient bookkeeping.
class EchelonBasis {
  public:
    explicit EchelonBasis(const PrimeField& F) : F_(F) {}
    // Returns true if v was independent of the current span (and was added).
    bool insert(std::vector<uint32_t> v);
    // Reduce v against the basis; result is 0 iff v is in the span.
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;
    long long dim() const { return (long long)rows_.size(); }

  private:
    PrimeField F_;
    std::vector<std::vector<uint32_t>> rows_; // reduced, each with unit pivot
    std::vector<long long> pivot_;
};

} // namespace detrep
