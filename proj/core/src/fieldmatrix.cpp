#include "detrep/fieldmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace detrep {

FieldMatrix FieldMatrix::zeros(long long r, long long c, const PrimeField& F) {
    FieldMatrix m;
    m.rows = r;
    m.cols = c;
    m.F = F;
    m.sparse = r * c > kDenseBudget;
    if (m.sparse)
        m.row_data.assign((size_t)r, {});
    else
        m.dense.assign((size_t)(r * c), 0);
    return m;
}

uint32_t FieldMatrix::at(long long r, long long c) const {
    if (!sparse) return dense[(size_t)(r * cols + c)];
    for (const auto& [cc, v] : row_data[(size_t)r])
        if (cc == c) return v;
    return 0;
}

void FieldMatrix::add_at(long long r, long long c, uint32_t v) {
    v %= F.p;
    if (v == 0) return;
    if (!sparse) {
        uint32_t& slot = dense[(size_t)(r * cols + c)];
        slot = F.add(slot, v);
    } else {
        row_data[(size_t)r].emplace_back((int)c, v);
    }
}

void FieldMatrix::finalize() {
    if (!sparse) return;
    for (auto& row : row_data) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, uint32_t>> merged;
        merged.reserve(row.size());
        for (const auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second = F.add(merged.back().second, v);
            else
                merged.emplace_back(c, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     merged.end());
        row = std::move(merged);
    }
}

namespace {

long long rank_dense(const FieldMatrix& m) {
    const PrimeField F = m.F;
    const long long R = m.rows, C = m.cols;
    std::vector<uint32_t> a = m.dense;
    long long rank = 0;
    for (long long col = 0; col < C && rank < R; ++col) {
        long long piv = -1;
        for (long long r = rank; r < R; ++r)
            if (a[(size_t)(r * C + col)]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long long c = col; c < C; ++c)
                std::swap(a[(size_t)(piv * C + c)], a[(size_t)(rank * C + c)]);
        const uint64_t p = F.p;
        uint32_t inv = F.inv(a[(size_t)(rank * C + col)]);
        for (long long c = col; c < C; ++c)
            a[(size_t)(rank * C + c)] =
                (uint32_t)((uint64_t)a[(size_t)(rank * C + c)] * inv % p);
        for (long long r = rank + 1; r < R; ++r) {
            uint32_t f = a[(size_t)(r * C + col)];
            if (!f) continue;
            uint64_t fneg = p - f;
            const uint32_t* prow = &a[(size_t)(rank * C)];
            uint32_t* rrow = &a[(size_t)(r * C)];
            for (long long c = col; c < C; ++c)
                rrow[c] = (uint32_t)((rrow[c] + fneg * prow[c]) % p);
        }
        ++rank;
    }
    return rank;
}

// Structured sparse elimination: rows bucketed by leading column, pivots
// taken left to right, shortest row first. Rows only ever move right.
long long rank_sparse(const FieldMatrix& m) {
    using Row = std::vector<std::pair<int, uint32_t>>;
    const PrimeField F = m.F;
    const uint64_t p = F.p;
    std::vector<Row> rows;
    rows.reserve(m.row_data.size());
    for (const auto& r : m.row_data)
        if (!r.empty()) rows.push_back(r);
    std::vector<std::vector<int>> bucket((size_t)m.cols);
    for (int i = 0; i < (int)rows.size(); ++i) bucket[(size_t)rows[i][0].first].push_back(i);

    long long rank = 0;
    Row tmp;
    for (long long col = 0; col < m.cols; ++col) {
        auto& b = bucket[(size_t)col];
        if (b.empty()) continue;
        int piv = b[0];
        for (int i : b)
            if (rows[i].size() < rows[piv].size()) piv = i;
        ++rank;
        uint32_t pinv = F.inv(rows[piv][0].second);
        for (int i : b) {
            if (i == piv) continue;
            Row& r = rows[i];
            const Row& pr = rows[piv];
            uint64_t f = p - (uint64_t)r[0].second * pinv % p; // -lead(r)/lead(piv)
            tmp.clear();
            tmp.reserve(r.size() + pr.size());
            size_t ir = 0, ip = 0;
            while (ir < r.size() && ip < pr.size()) {
                if (r[ir].first < pr[ip].first) {
                    tmp.push_back(r[ir++]);
                } else if (r[ir].first > pr[ip].first) {
                    uint32_t v = (uint32_t)(f * pr[ip].second % p);
                    if (v) tmp.emplace_back(pr[ip].first, v);
                    ++ip;
                } else {
                    uint32_t v = (uint32_t)((r[ir].second + f * pr[ip].second) % p);
                    if (v) tmp.emplace_back(r[ir].first, v);
                    ++ir;
                    ++ip;
                }
            }
            while (ir < r.size()) tmp.push_back(r[ir++]);
            while (ip < pr.size()) {
                uint32_t v = (uint32_t)(f * pr[ip].second % p);
                if (v) tmp.emplace_back(pr[ip].first, v);
                ++ip;
            }
            r.swap(tmp);
            if (!r.empty()) bucket[(size_t)r[0].first].push_back(i);
        }
        Row keep = std::move(rows[piv]);
        b.clear();
        rows[piv] = std::move(keep); // pivot row retired with its bucket
    }
    return rank;
}

} // namespace

long long rank(const FieldMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return m.sparse ? rank_sparse(m) : rank_dense(m);
}

long long kernel_dim(const FieldMatrix& m) { return m.cols - rank(m); }

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t = FieldMatrix::zeros(cols, rows, F);
    if (!sparse && !t.sparse) {
        for (long long r = 0; r < rows; ++r)
            for (long long c = 0; c < cols; ++c) t.dense[(size_t)(c * rows + r)] = at(r, c);
        return t;
    }
    // route through sparse
    t.sparse = true;
    t.dense.clear();
    t.row_data.assign((size_t)cols, {});
    if (sparse) {
        for (long long r = 0; r < rows; ++r)
            for (const auto& [c, v] : row_data[(size_t)r])
                t.row_data[(size_t)c].emplace_back((int)r, v);
    } else {
        for (long long r = 0; r < rows; ++r)
            for (long long c = 0; c < cols; ++c)
                if (uint32_t v = at(r, c)) t.row_data[(size_t)c].emplace_back((int)r, v);
    }
    t.finalize();
    return t;
}

std::vector<std::vector<uint32_t>> nullspace(const FieldMatrix& m) {
    if (m.sparse) throw std::logic_error("nullspace: dense matrices only");
    const PrimeField F = m.F;
    const uint64_t p = F.p;
    const long long R = m.rows, C = m.cols;
    std::vector<uint32_t> a = m.dense;
    std::vector<long long> pivot_col;
    long long rank = 0;
    for (long long col = 0; col < C && rank < R; ++col) {
        long long piv = -1;
        for (long long r = rank; r < R; ++r)
            if (a[(size_t)(r * C + col)]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long long c = 0; c < C; ++c)
                std::swap(a[(size_t)(piv * C + c)], a[(size_t)(rank * C + c)]);
        uint32_t inv = F.inv(a[(size_t)(rank * C + col)]);
        for (long long c = 0; c < C; ++c)
            a[(size_t)(rank * C + c)] = (uint32_t)((uint64_t)a[(size_t)(rank * C + c)] * inv % p);
        for (long long r = 0; r < R; ++r) {
            if (r == rank) continue;
            uint32_t f = a[(size_t)(r * C + col)];
            if (!f) continue;
            uint64_t fneg = p - f;
            for (long long c = 0; c < C; ++c)
                a[(size_t)(r * C + c)] =
                    (uint32_t)((a[(size_t)(r * C + c)] + fneg * a[(size_t)(rank * C + c)]) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot((size_t)C, false);
    for (long long c : pivot_col) is_pivot[(size_t)c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (long long free_c = 0; free_c < C; ++free_c) {
        if (is_pivot[(size_t)free_c]) continue;
        std::vector<uint32_t> v((size_t)C, 0);
        v[(size_t)free_c] = 1;
        for (long long r = 0; r < rank; ++r) {
            uint32_t coef = a[(size_t)(r * C + free_c)];
            if (coef) v[(size_t)pivot_col[(size_t)r]] = F.neg(coef);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool EchelonBasis::insert(std::vector<uint32_t> v) {
    v = reduce(std::move(v));
    long long piv = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) {
            piv = (long long)i;
            break;
        }
    if (piv < 0) return false;
    uint32_t inv = F_.inv(v[(size_t)piv]);
    for (auto& x : v) x = F_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivot_.push_back(piv);
    return true;
}

std::vector<uint32_t> EchelonBasis::reduce(std::vector<uint32_t> v) const {
    const uint64_t p = F_.p;
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = v[(size_t)pivot_[i]];
        if (!f) continue;
        uint64_t fneg = p - f;
        const auto& row = rows_[i];
        for (size_t c = 0; c < v.size(); ++c) v[c] = (uint32_t)((v[c] + fneg * row[c]) % p);
    }
    return v;
}

bool EchelonBasis::contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    for (uint32_t x : r)
        if (x) return false;
    return true;
}

} // namespace detrep
