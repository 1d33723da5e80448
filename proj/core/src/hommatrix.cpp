#include "detrep/hommatrix.hpp"

#include <stdexcept>

namespace detrep {

HomogMatrix HomogMatrix::zeros(const GradedFreeModule& tgt, const GradedFreeModule& src,
                               int n_vars) {
    HomogMatrix m;
    m.source = src;
    m.target = tgt;
    m.n_vars = n_vars;
    m.entries.assign((size_t)tgt.rank(), {});
    for (int p = 0; p < tgt.rank(); ++p) {
        m.entries[(size_t)p].reserve((size_t)src.rank());
        for (int q = 0; q < src.rank(); ++q)
            m.entries[(size_t)p].emplace_back(n_vars, src.twists[(size_t)q] - tgt.twists[(size_t)p]);
    }
    return m;
}

void HomogMatrix::set(int p, int q, HomogPoly f) {
    int want = source.twists[(size_t)q] - target.twists[(size_t)p];
    if (!f.is_zero() && f.degree != want)
        throw std::logic_error("HomogMatrix::set: entry degree mismatch");
    f.degree = want;
    entries[(size_t)p][(size_t)q] = std::move(f);
}

bool HomogMatrix::degrees_consistent() const {
    for (int p = 0; p < target.rank(); ++p)
        for (int q = 0; q < source.rank(); ++q) {
            const HomogPoly& f = at(p, q);
            if (!f.is_zero() && f.degree != source.twists[(size_t)q] - target.twists[(size_t)p])
                return false;
        }
    return true;
}

bool HomogMatrix::is_zero() const {
    for (const auto& row : entries)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

HomogMatrix HomogMatrix::dual(int extra_twist) const {
    HomogMatrix d = HomogMatrix::zeros(source.dual(extra_twist), target.dual(extra_twist), n_vars);
    for (int p = 0; p < target.rank(); ++p)
        for (int q = 0; q < source.rank(); ++q) d.set(q, p, at(p, q));
    return d;
}

HomogMatrix HomogMatrix::twisted(int s) const {
    HomogMatrix t = *this;
    t.source = source.twisted(s);
    t.target = target.twisted(s);
    return t;
}

HomogMatrix compose(const HomogMatrix& a, const HomogMatrix& b, const PrimeField& F) {
    if (a.source.twists != b.target.twists)
        throw std::invalid_argument("compose: middle modules do not match");
    HomogMatrix c = HomogMatrix::zeros(a.target, b.source, a.n_vars);
    for (int p = 0; p < a.target.rank(); ++p)
        for (int q = 0; q < b.source.rank(); ++q) {
            HomogPoly s(a.n_vars, b.source.twists[(size_t)q] - a.target.twists[(size_t)p]);
            for (int k = 0; k < a.source.rank(); ++k) {
                const HomogPoly& f = a.at(p, k);
                const HomogPoly& g = b.at(k, q);
                if (f.is_zero() || g.is_zero()) continue;
                s = poly_add(s, poly_mul(f, g, F), F);
            }
            c.set(p, q, std::move(s));
        }
    return c;
}

FieldMatrix graded_piece(const HomogMatrix& m, int nu, const PrimeField& F) {
    const int nv = m.n_vars;
    std::vector<long long> row_off((size_t)m.target.rank() + 1, 0);
    std::vector<long long> col_off((size_t)m.source.rank() + 1, 0);
    for (int p = 0; p < m.target.rank(); ++p) {
        int d = nu - m.target.twists[(size_t)p];
        row_off[(size_t)p + 1] = row_off[(size_t)p] + (d >= 0 ? binom(nv - 1 + d, nv - 1) : 0);
    }
    for (int q = 0; q < m.source.rank(); ++q) {
        int d = nu - m.source.twists[(size_t)q];
        col_off[(size_t)q + 1] = col_off[(size_t)q] + (d >= 0 ? binom(nv - 1 + d, nv - 1) : 0);
    }
    FieldMatrix out = FieldMatrix::zeros(row_off.back(), col_off.back(), F);
    if (out.rows == 0 || out.cols == 0) return out;

    for (int q = 0; q < m.source.rank(); ++q) {
        int ds = nu - m.source.twists[(size_t)q];
        if (ds < 0) continue;
        const auto& src_basis = monomial_basis(nv, ds);
        for (int p = 0; p < m.target.rank(); ++p) {
            int dt = nu - m.target.twists[(size_t)p];
            if (dt < 0) continue;
            const HomogPoly& f = m.at(p, q);
            if (f.is_zero()) continue;
            for (size_t a = 0; a < src_basis.size(); ++a) {
                const Exps& alpha = src_basis[a];
                for (const auto& [gamma, coef] : f.terms) {
                    Exps beta(nv);
                    for (int i = 0; i < nv; ++i) beta[(size_t)i] = (uint8_t)(alpha[(size_t)i] + gamma[(size_t)i]);
                    long long r = row_off[(size_t)p] + monomial_index(nv, beta);
                    out.add_at(r, col_off[(size_t)q] + (long long)a, coef);
                }
            }
        }
    }
    out.finalize();
    return out;
}

HomogMatrix identity_matrix(const GradedFreeModule& f, int n_vars, const PrimeField& F) {
    HomogMatrix m = HomogMatrix::zeros(f, f, n_vars);
    for (int i = 0; i < f.rank(); ++i) m.set(i, i, HomogPoly::constant(n_vars, 1, F));
    return m;
}

HomogMatrix cut_last_var(const HomogMatrix& m, const std::vector<uint32_t>& lambda,
                         const PrimeField& F) {
    HomogMatrix c = HomogMatrix::zeros(m.target, m.source, m.n_vars - 1);
    for (int p = 0; p < m.target.rank(); ++p)
        for (int q = 0; q < m.source.rank(); ++q) {
            const HomogPoly& f = m.at(p, q);
            if (!f.is_zero()) c.set(p, q, substitute_last_var(f, lambda, F));
        }
    return c;
}

} // namespace detrep
