#include "detrep/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace detrep {

DegreeMatrix DegreeMatrix::linear(int t, int c) {
    DegreeMatrix dm;
    dm.t = t;
    dm.c = c;
    dm.b.assign((size_t)t, 0);
    dm.a.assign((size_t)(t + c - 1), 1);
    return dm;
}

void DegreeMatrix::validate() const {
    if (t < 2) throw std::invalid_argument("DegreeMatrix: t >= 2 required");
    if (c < 1) throw std::invalid_argument("DegreeMatrix: c >= 1 required");
    if ((int)b.size() != t || (int)a.size() != t + c - 1)
        throw std::invalid_argument("DegreeMatrix: wrong b/a lengths");
    for (size_t i = 1; i < b.size(); ++i)
        if (b[i] > b[i - 1]) throw std::invalid_argument("DegreeMatrix: b not sorted descending");
    for (size_t j = 1; j < a.size(); ++j)
        if (a[j] > a[j - 1]) throw std::invalid_argument("DegreeMatrix: a not sorted descending");
}

int DegreeMatrix::ell() const {
    int s = 0;
    for (int x : a) s += x;
    for (int x : b) s -= x;
    return s;
}

int DegreeMatrix::mu() const {
    int tail = 0; // sum_{j=c+1}^{t+c-1} a_j (1-based indices)
    for (int j = c; j < t + c - 1; ++j) tail += a[(size_t)j];
    int sb = 0;
    for (int x : b) sb += x;
    return t + 1 - tail + sb + b[0];
}

std::optional<int> DegreeMatrix::mu1() const {
    if (t == 2) return 2 - a[(size_t)c] + 2 * b[0] + b[1];
    if (t == 3) return 3 - a[(size_t)c] - a[(size_t)c + 1] + 2 * b[0] + b[1] + b[2];
    return std::nullopt;
}

bool DegreeMatrix::is_linear() const {
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; }) &&
           std::all_of(a.begin(), a.end(), [](int x) { return x == 1; });
}

DeterminantalModel new_model(const DegreeMatrix& dm, int n, const PrimeField& field,
                             uint64_t seed) {
    dm.validate();
    if (n < dm.c) throw std::invalid_argument("new_model: n >= c required");
    if (field.p <= (uint32_t)(dm.t + dm.c))
        throw std::invalid_argument("new_model: prime too small for (t, c)");
    DeterminantalModel m;
    m.dm = dm;
    m.n = n;
    m.field = field;
    m.seed = seed;
    GradedFreeModule F{dm.a}, G{dm.b};
    m.phi = HomogMatrix::zeros(G, F, n + 1);
    Rng rng(seed);
    // coefficients drawn row-major so a model is reproducible from its seed
    for (int i = 0; i < dm.t; ++i)
        for (int j = 0; j < dm.t + dm.c - 1; ++j) {
            int d = dm.a[(size_t)j] - dm.b[(size_t)i];
            if (d < 0) continue; // stays zero
            m.phi.set(i, j, random_form(n + 1, d, rng, field));
        }
    return m;
}

namespace {

HomogPoly minor_rec(const DeterminantalModel& model, uint32_t rowmask, uint32_t colmask,
                    const std::vector<int>& cols, int deg,
                    std::map<std::pair<uint32_t, uint32_t>, HomogPoly>& memo) {
    const PrimeField& F = model.field;
    int nv = model.n_vars();
    if (rowmask == 0) return HomogPoly::constant(nv, 1, F);
    auto key = std::make_pair(rowmask, colmask);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // expand along the first remaining column
    int col = -1;
    for (int j : cols)
        if (colmask & (1u << j)) {
            col = j;
            break;
        }
    HomogPoly acc(nv, deg);
    int sign_pos = 0;
    for (int i = 0; i < model.dm.t; ++i) {
        if (!(rowmask & (1u << i))) continue;
        const HomogPoly& e = model.phi.at(i, col);
        ++sign_pos;
        if (e.is_zero()) continue;
        HomogPoly sub = minor_rec(model, rowmask & ~(1u << i), colmask & ~(1u << col), cols,
                                  deg - e.degree, memo);
        if (sub.is_zero()) continue;
        HomogPoly term = poly_mul(e, sub, F);
        if (sign_pos % 2 == 0) term = poly_scale(term, F.p - 1, F);
        acc = poly_add(acc, term, F);
    }
    memo.emplace(key, acc);
    return acc;
}

} // namespace

HomogPoly minor_on_columns(const DeterminantalModel& model, const std::vector<int>& cols) {
    const DegreeMatrix& dm = model.dm;
    if ((int)cols.size() != dm.t) throw std::invalid_argument("minor_on_columns: need t columns");
    if (dm.t > 8) throw std::invalid_argument("minor_on_columns: t too large for dense Laplace");
    int deg = 0;
    uint32_t colmask = 0;
    for (int j : cols) {
        deg += dm.a[(size_t)j];
        colmask |= 1u << j;
    }
    for (int x : dm.b) deg -= x;
    std::map<std::pair<uint32_t, uint32_t>, HomogPoly> memo;
    return minor_rec(model, (1u << dm.t) - 1, colmask, cols, deg, memo);
}

std::vector<HomogPoly> maximal_minors(const DeterminantalModel& model) {
    const DegreeMatrix& dm = model.dm;
    std::vector<HomogPoly> out;
    std::vector<int> cols((size_t)dm.t);
    for (int i = 0; i < dm.t; ++i) cols[(size_t)i] = i;
    int m = dm.t + dm.c - 1;
    while (true) {
        out.push_back(minor_on_columns(model, cols));
        int i = dm.t - 1;
        while (i >= 0 && cols[(size_t)i] == m - dm.t + i) --i;
        if (i < 0) break;
        ++cols[(size_t)i];
        for (int k = i + 1; k < dm.t; ++k) cols[(size_t)k] = cols[(size_t)k - 1] + 1;
    }
    return out;
}

long long curve_genus(int t, int n) {
    long long s = 0;
    for (int i = 1; i <= t - 1; ++i) s += (long long)(i - 1) * binom(n + i - 2, i);
    return s;
}

ModelInvariants invariants(const DeterminantalModel& model) {
    const DegreeMatrix& dm = model.dm;
    ModelInvariants inv;
    inv.ell = dm.ell();
    inv.mu = dm.mu();
    inv.mu1 = dm.mu1();
    if (dm.is_linear()) {
        inv.degree = binom(dm.t + dm.c - 1, dm.c);
        for (int i = 1; i <= dm.c; ++i)
            inv.rho.push_back(binom(dm.c + dm.t - 1, i + dm.t - 1) * binom(i + dm.t - 2, dm.t - 1));
        if (model.dim_x() == 1) inv.genus = curve_genus(dm.t, model.n);
    }
    return inv;
}

HypothesisReport hypothesis_check(const DegreeMatrix& dm, int n) {
    dm.validate();
    HypothesisReport r;
    const int t = dm.t, c = dm.c;
    const auto& a = dm.a;
    const auto& b = dm.b;

    long long tail = 0;
    for (int j = c; j < t + c - 1; ++j) tail += a[(size_t)j];
    long long rhs = 1 + b[0] - b[(size_t)t - 1];
    for (int i = 0; i < t - 1; ++i) rhs += b[(size_t)i];
    r.main_inequality = tail > rhs;

    r.depth_condition = true;
    for (int i = 1; i <= t - 1; ++i) {
        int lhs = a[(size_t)(c + i - 1)]; // a_{c+i}, 1-based
        int rb = b[(size_t)(i - 1)];
        if (c >= 2 ? lhs < rb : lhs <= rb) r.depth_condition = false;
    }

    int a_c1 = a[(size_t)c]; // a_{c+1}, 1-based
    if (t == 3 && a_c1 <= 1 + b[0])
        r.t3_side = a[(size_t)c + 1] > b[0] && a[(size_t)c - 1] == a_c1;
    if (t >= 4 && a_c1 <= 1 + b[0]) r.t4_side = a[(size_t)c + 2] > b[0];

    for (int x : a)
        if (x == a_c1) ++r.alpha;
    if (t == 2) {
        r.t2_boundary = a_c1 == 1 + 2 * b[0] - b[1];
        r.t2_alpha_ok = a_c1 != 1 + b[0] || 2 * r.alpha <= n - 2;
    }
    if (t == 3)
        r.t3_boundary = a[(size_t)c - 1] > a_c1 && a_c1 == b[0] + 1 && a[(size_t)c + 1] > b[0] &&
                        b[1] - 1 <= b[2];

    r.a_greater_b = a[(size_t)(t + c - 2)] > b[0];
    r.a_greater_b_gap = r.a_greater_b && b[(size_t)t - 2] - b[(size_t)t - 1] <= std::max(0, t - 3);
    r.dim_at_least_2 = n - c >= 2;

    bool bigthm = r.dim_at_least_2 && r.main_inequality && r.depth_condition && r.t3_side &&
                  r.t4_side;
    if (bigthm)
        r.verdict = "Theorem Bigthm applies";
    else if (t == 2 && r.dim_at_least_2 && r.depth_condition && r.t2_boundary && r.t2_alpha_ok)
        r.verdict = "t=2 boundary case";
    else if (t == 3 && r.dim_at_least_2 && r.depth_condition && r.t3_boundary)
        r.verdict = "t=3 boundary case";
    else
        r.verdict = "no theorem applies";
    return r;
}

} // namespace detrep
