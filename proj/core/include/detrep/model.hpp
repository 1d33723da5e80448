#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detrep/hommatrix.hpp"

namespace detrep {

// Degree data of phi: F = (+)_j R(-a_j) -> G = (+)_i R(-b_i), a t x (t+c-1)
// matrix with entry (i, j) of degree a_j - b_i. Rows sorted b_t <= ... <= b_1,
// columns a_{t+c-1} <= ... <= a_1 (stored in that descending order).
struct DegreeMatrix {
    int t = 2;
    int c = 1;
    std::vector<int> b; // size t, descending
    std::vector<int> a; // size t+c-1, descending

    static DegreeMatrix linear(int t, int c); // all b = 0, a = 1

    void validate() const;

    int ell() const;               // sum a - sum b
    int mu() const;                // t+1 - sum_{j=c+1}^{t+c-1} a_j + sum b_i + b_1
    std::optional<int> mu1() const; // only t = 2, 3
    bool is_linear() const;
};

struct HypothesisReport {
    bool main_inequality = false;    // sum_{j>c} a_j > 1 + sum_{i<t} b_i + b_1 - b_t
    bool depth_condition = false;    // a_{c+i} >= b_i (strict when c = 1)
    bool t3_side = true;             // t=3, a_{c+1} <= 1+b_1 -> a_{c+2} > b_1 and a_c = a_{c+1}
    bool t4_side = true;             // t>=4, a_{c+1} <= 1+b_1 -> a_{c+3} > b_1
    bool t2_boundary = false;        // t=2 and a_{c+1} = 1 + 2 b_1 - b_2
    int alpha = 0;                   // #{ i : a_i = a_{c+1} }
    bool t2_alpha_ok = false;        // 2 alpha <= n-2 when a_{c+1} = 1 + b_1
    bool t3_boundary = false;        // t=3, a_c > a_{c+1} = b_1+1, a_{c+2} > b_1, b_2 - 1 <= b_3
    bool a_greater_b = false;        // a_j > b_i for all j, i
    bool a_greater_b_gap = false;    //   ... and b_{t-1} - b_t <= max{0, t-3}
    bool dim_at_least_2 = false;     // n - c >= 2
    std::string verdict;             // which theorem applies
};

// The full model: degree matrix, ambient dimension, field, seed and the
// seeded generic matrix phi.
struct DeterminantalModel {
    DegreeMatrix dm;
    int n = 0; // ambient P^n
    PrimeField field;
    uint64_t seed = 1;
    HomogMatrix phi; // t x (t+c-1)

    int n_vars() const { return n + 1; }
    int dim_x() const { return n - dm.c; }
    // K_X = S_{c-1}M(canonical_twist) in the linear case.
    int canonical_twist() const { return dm.t + dm.c - n - 2; }
};

DeterminantalModel new_model(const DegreeMatrix& dm, int n, const PrimeField& field,
                             uint64_t seed);

// The C(t+c-1, t) maximal minors of phi; minor on column set T has degree
// sum_{j in T} a_j - sum_i b_i. Laplace expansion, t <= 8.
std::vector<HomogPoly> maximal_minors(const DeterminantalModel& model);

// det of the t x t submatrix of phi on the given (sorted, 0-based) columns.
HomogPoly minor_on_columns(const DeterminantalModel& model, const std::vector<int>& cols);

struct ModelInvariants {
    long long degree = 0;          // C(t+c-1, c), linear case
    std::vector<long long> rho;    // Betti numbers rho_1..rho_c of D_0, linear case
    std::optional<long long> genus; // curves only (n - c = 1)
    int ell = 0;
    int mu = 0;
    std::optional<int> mu1;
};

ModelInvariants invariants(const DeterminantalModel& model);

// Arithmetic genus of a linear determinantal curve: sum_{i=1}^{t-1} (i-1) C(n+i-2, i).
long long curve_genus(int t, int n);

HypothesisReport hypothesis_check(const DegreeMatrix& dm, int n);

} // namespace detrep
