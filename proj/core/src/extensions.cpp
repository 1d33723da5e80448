#include "detrep/extensions.hpp"

#include <algorithm>
#include <stdexcept>

namespace detrep {

bool ModulePresentation::minimal(const PrimeField&) const {
    for (int p = 0; p < rels.target.rank(); ++p)
        for (int q = 0; q < rels.source.rank(); ++q) {
            const HomogPoly& f = rels.at(p, q);
            if (!f.is_zero() && f.degree == 0) return false;
        }
    return true;
}

ModulePresentation ModulePresentation::twisted(int s) const {
    ModulePresentation t = *this;
    t.gens = gens.twisted(s);
    t.rels = rels.twisted(s);
    if (syz) t.syz = syz->twisted(s);
    if (s) t.label += "(" + std::to_string(s) + ")";
    return t;
}

ModulePresentation presentation_of(const DeterminantalModel& model, StdModule which, int j,
                                   int twist_s) {
    ModulePresentation mp;
    mp.n_vars = model.n_vars();
    switch (which) {
        case StdModule::M: {
            GradedComplex d1 = build_D(model, 1);
            mp.gens = d1.modules[0];
            mp.rels = d1.diffs[0];
            if (d1.length() >= 2) mp.syz = d1.diffs[1];
            mp.label = "M";
            break;
        }
        case StdModule::Mdual: {
            GradedComplex dm1 = build_D(model, -1);
            mp.gens = dm1.modules[0];
            mp.rels = dm1.diffs[0];
            if (dm1.length() >= 2) mp.syz = dm1.diffs[1];
            mp.label = "Mdual";
            break;
        }
        case StdModule::SjM: {
            if (j < 0) throw std::out_of_range("presentation_of: j >= 0 required");
            GradedComplex res = j <= model.dm.c ? build_D(model, j) : build_C(model, j);
            if (res.length() < 1)
                throw std::out_of_range("presentation_of: complex too short for a presentation");
            mp.gens = res.modules[0];
            mp.rels = res.diffs[0];
            if (res.length() >= 2) mp.syz = res.diffs[1];
            mp.label = "S_" + std::to_string(j) + "M";
            break;
        }
    }
    return twist_s ? mp.twisted(twist_s) : mp;
}

long long presentation_hilbert(const ModulePresentation& mp, int nu, const PrimeField& F) {
    return mp.gens.piece_dim(nu, mp.n_vars) - rank(graded_piece(mp.rels, nu, F));
}

long long generator_count(const ModulePresentation& mp, const PrimeField& F) {
    // constant entries can only connect summands with equal twists; the
    // defect is the rank of the scalar block for each twist value
    long long defect = 0;
    std::vector<int> twist_values = mp.gens.twists;
    std::sort(twist_values.begin(), twist_values.end());
    twist_values.erase(std::unique(twist_values.begin(), twist_values.end()), twist_values.end());
    for (int w : twist_values) {
        std::vector<int> rows_w, cols_w;
        for (int p = 0; p < mp.gens.rank(); ++p)
            if (mp.gens.twists[(size_t)p] == w) rows_w.push_back(p);
        for (int q = 0; q < mp.rels.source.rank(); ++q)
            if (mp.rels.source.twists[(size_t)q] == w) cols_w.push_back(q);
        if (rows_w.empty() || cols_w.empty()) continue;
        FieldMatrix blk = FieldMatrix::zeros((long long)rows_w.size(), (long long)cols_w.size(), F);
        for (size_t i = 0; i < rows_w.size(); ++i)
            for (size_t k = 0; k < cols_w.size(); ++k) {
                const HomogPoly& f = mp.rels.at(rows_w[i], cols_w[k]);
                if (!f.is_zero() && f.degree == 0) blk.add_at((long long)i, (long long)k,
                                                              f.terms.begin()->second);
            }
        defect += rank(blk);
    }
    return mp.gens.rank() - defect;
}

HomSpace hom_space(const GradedFreeModule& src, const GradedFreeModule& tgt, int n_vars) {
    HomSpace hs;
    hs.src = src;
    hs.tgt = tgt;
    hs.n_vars = n_vars;
    for (int p = 0; p < tgt.rank(); ++p)
        for (int q = 0; q < src.rank(); ++q) {
            int d = src.twists[(size_t)q] - tgt.twists[(size_t)p];
            if (d < 0) continue;
            for (const Exps& m : monomial_basis(n_vars, d)) hs.coords.push_back({p, q, m});
        }
    return hs;
}

HomogMatrix HomSpace::to_matrix(const std::vector<uint32_t>& v, const PrimeField& F) const {
    HomogMatrix m = HomogMatrix::zeros(tgt, src, n_vars);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (!v[i]) continue;
        const Coord& c = coords[i];
        m.entries[(size_t)c.p][(size_t)c.q].add_term(c.mono, v[i], F);
    }
    return m;
}

std::vector<uint32_t> HomSpace::from_matrix(const HomogMatrix& m) const {
    std::vector<uint32_t> v(coords.size(), 0);
    for (size_t i = 0; i < coords.size(); ++i) {
        const Coord& c = coords[i];
        const HomogPoly& f = m.at(c.p, c.q);
        auto it = f.terms.find(c.mono);
        if (it != f.terms.end()) v[i] = it->second;
    }
    return v;
}

namespace {

// matrix of  xi |-> xi o C  from Hom(A, B)_0 to Hom(A', B)_0, C : A' -> A
FieldMatrix right_compose_op(const HomSpace& dom, const HomSpace& codom, const HomogMatrix& C,
                             const PrimeField& F) {
    FieldMatrix op = FieldMatrix::zeros(codom.dim(), dom.dim(), F);
    for (size_t j = 0; j < dom.coords.size(); ++j) {
        const auto& [p, q, mono] = dom.coords[j];
        // basis element e = mono * E_{pq}; (e o C)(p, q') = mono * C[q][q']
        HomogMatrix img = HomogMatrix::zeros(codom.tgt, codom.src, codom.n_vars);
        for (int q2 = 0; q2 < codom.src.rank(); ++q2) {
            const HomogPoly& c = C.at(q, q2);
            if (c.is_zero()) continue;
            img.entries[(size_t)p][(size_t)q2] =
                poly_mul(HomogPoly::monomial(dom.n_vars, mono, 1), c, F);
        }
        auto v = codom.from_matrix(img);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) op.add_at((long long)i, (long long)j, v[i]);
    }
    op.finalize();
    return op;
}

// matrix of  eta |-> C o eta  from Hom(A, B)_0 to Hom(A, B')_0, C : B -> B'
FieldMatrix left_compose_op(const HomSpace& dom, const HomSpace& codom, const HomogMatrix& C,
                            const PrimeField& F) {
    FieldMatrix op = FieldMatrix::zeros(codom.dim(), dom.dim(), F);
    for (size_t j = 0; j < dom.coords.size(); ++j) {
        const auto& [p, q, mono] = dom.coords[j];
        HomogMatrix img = HomogMatrix::zeros(codom.tgt, codom.src, codom.n_vars);
        for (int p2 = 0; p2 < codom.tgt.rank(); ++p2) {
            const HomogPoly& c = C.at(p2, p);
            if (c.is_zero()) continue;
            img.entries[(size_t)p2][(size_t)q] =
                poly_mul(c, HomogPoly::monomial(dom.n_vars, mono, 1), F);
        }
        auto v = codom.from_matrix(img);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) op.add_at((long long)i, (long long)j, v[i]);
    }
    op.finalize();
    return op;
}

FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& F) {
    if (a.rows != b.rows) throw std::logic_error("hstack: row mismatch");
    FieldMatrix m = FieldMatrix::zeros(a.rows, a.cols + b.cols, F);
    for (long long r = 0; r < a.rows; ++r) {
        for (long long c = 0; c < a.cols; ++c)
            if (uint32_t v = a.at(r, c)) m.add_at(r, c, v);
        for (long long c = 0; c < b.cols; ++c)
            if (uint32_t v = b.at(r, c)) m.add_at(r, a.cols + c, v);
    }
    return m;
}

} // namespace

CocycleSpace cocycle_space(const ModulePresentation& quot, const ModulePresentation& sub,
                           const PrimeField& F) {
    if (!quot.syz)
        throw std::invalid_argument("cocycle_space: quot needs three terms (syzygies)");
    const int nv = quot.n_vars;
    const GradedFreeModule& H0 = quot.gens;
    const GradedFreeModule& H1 = quot.rels.source;
    const GradedFreeModule& H2 = quot.syz->source;
    const GradedFreeModule& G0 = sub.gens;
    const GradedFreeModule& G1 = sub.rels.source;

    CocycleSpace cs;
    cs.w1 = hom_space(H1, G0, nv);
    HomSpace w3 = hom_space(H2, G0, nv);
    HomSpace wb = hom_space(H2, G1, nv);
    HomSpace w0 = hom_space(H0, G0, nv);
    HomSpace wd = hom_space(H1, G1, nv);

    // cocycles: xi with xi o d2 in the image of p1 o -
    FieldMatrix A = right_compose_op(cs.w1, w3, *quot.syz, F); // xi -> xi o d2
    FieldMatrix B = left_compose_op(wb, w3, sub.rels, F);      // eta -> p1 o eta
    FieldMatrix AB = hstack(A, B, F);
    std::vector<std::vector<uint32_t>> null_ab = nullspace(AB);

    // coboundaries: lambda o d1 and p1 o eta'
    FieldMatrix Cb = right_compose_op(w0, cs.w1, quot.rels, F);
    FieldMatrix Db = left_compose_op(wd, cs.w1, sub.rels, F);
    cs.coboundaries = EchelonBasis(F);
    for (long long c = 0; c < Cb.cols; ++c) {
        std::vector<uint32_t> v((size_t)Cb.rows);
        for (long long r = 0; r < Cb.rows; ++r) v[(size_t)r] = Cb.at(r, c);
        cs.coboundaries.insert(std::move(v));
    }
    for (long long c = 0; c < Db.cols; ++c) {
        std::vector<uint32_t> v((size_t)Db.rows);
        for (long long r = 0; r < Db.rows; ++r) v[(size_t)r] = Db.at(r, c);
        cs.coboundaries.insert(std::move(v));
    }

    EchelonBasis span(F);
    for (long long c = 0; c < Cb.cols; ++c) { // start from the coboundary span
        std::vector<uint32_t> v((size_t)Cb.rows);
        for (long long r = 0; r < Cb.rows; ++r) v[(size_t)r] = Cb.at(r, c);
        span.insert(std::move(v));
    }
    for (long long c = 0; c < Db.cols; ++c) {
        std::vector<uint32_t> v((size_t)Db.rows);
        for (long long r = 0; r < Db.rows; ++r) v[(size_t)r] = Db.at(r, c);
        span.insert(std::move(v));
    }
    for (const auto& nv_vec : null_ab) {
        std::vector<uint32_t> xi(nv_vec.begin(), nv_vec.begin() + (long)cs.w1.dim());
        if (span.insert(xi)) {
            cs.basis.push_back(cs.w1.to_matrix(xi, F));
            ++cs.dim;
        }
    }
    return cs;
}

ExtensionPresentation build_extension(const ModulePresentation& sub,
                                      const ModulePresentation& quot,
                                      const std::vector<HomogMatrix>& cocycles,
                                      const CocycleSpace& space, const PrimeField& F) {
    const int r = (int)cocycles.size() + 1;
    ExtensionPresentation ext;
    ext.sub = sub;
    ext.quot = quot;
    ext.rank = r;
    ext.cocycles = cocycles;

    ext.split_input = std::all_of(cocycles.begin(), cocycles.end(),
                                  [](const HomogMatrix& m) { return m.is_zero(); });
    if (!ext.split_input) {
        EchelonBasis indep = space.coboundaries;
        for (const HomogMatrix& xi : cocycles)
            if (!indep.insert(space.w1.from_matrix(xi)))
                throw std::invalid_argument(
                    "build_extension: cocycles dependent modulo coboundaries");
    }

    // gens = G0 (+) H0^{r-1}, rels = [[p1, xi_1 .. xi_{r-1}], [0, p2 (+)...]]
    GradedFreeModule gens = sub.gens;
    for (int k = 1; k < r; ++k)
        gens.twists.insert(gens.twists.end(), quot.gens.twists.begin(), quot.gens.twists.end());
    GradedFreeModule rel_src = sub.rels.source;
    for (int k = 1; k < r; ++k)
        rel_src.twists.insert(rel_src.twists.end(), quot.rels.source.twists.begin(),
                              quot.rels.source.twists.end());
    HomogMatrix rels = HomogMatrix::zeros(gens, rel_src, sub.n_vars);
    const int g0 = sub.gens.rank(), g1 = sub.rels.source.rank();
    const int h0 = quot.gens.rank(), h1 = quot.rels.source.rank();
    for (int p = 0; p < g0; ++p)
        for (int q = 0; q < g1; ++q) rels.set(p, q, sub.rels.at(p, q));
    for (int k = 1; k < r; ++k) {
        const HomogMatrix& xi = cocycles[(size_t)k - 1];
        for (int p = 0; p < g0; ++p)
            for (int q = 0; q < h1; ++q) rels.set(p, g1 + (k - 1) * h1 + q, xi.at(p, q));
        for (int p = 0; p < h0; ++p)
            for (int q = 0; q < h1; ++q)
                rels.set(g0 + (k - 1) * h0 + p, g1 + (k - 1) * h1 + q, quot.rels.at(p, q));
    }
    ext.assembled.gens = gens;
    ext.assembled.rels = std::move(rels);
    ext.assembled.n_vars = sub.n_vars;
    ext.assembled.label = "E(rank " + std::to_string(r) + ")";
    return ext;
}

std::pair<bool, long long> a_module_test(const ModulePresentation& mp,
                                         const DeterminantalModel& model) {
    const PrimeField& F = model.field;
    long long failures = 0;
    std::vector<HomogPoly> minors = maximal_minors(model);
    for (int g = 0; g < mp.gens.rank(); ++g) {
        int ug = mp.gens.twists[(size_t)g];
        for (const HomogPoly& m : minors) {
            if (m.is_zero()) continue;
            int nu = ug + m.degree;
            FieldMatrix piece = graded_piece(mp.rels, nu, F);
            // coordinates of m * e_g inside the degree-nu piece of the free cover
            std::vector<uint32_t> target((size_t)piece.rows, 0);
            long long off = 0;
            for (int p = 0; p < g; ++p) {
                int d = nu - mp.gens.twists[(size_t)p];
                if (d >= 0) off += binom(mp.n_vars - 1 + d, mp.n_vars - 1);
            }
            for (const auto& [e, c] : m.terms)
                target[(size_t)(off + monomial_index(mp.n_vars, e))] = c;
            EchelonBasis span(F);
            for (long long col = 0; col < piece.cols; ++col) {
                std::vector<uint32_t> v((size_t)piece.rows);
                for (long long row = 0; row < piece.rows; ++row) v[(size_t)row] = piece.at(row, col);
                span.insert(std::move(v));
            }
            if (!span.contains(target)) ++failures;
        }
    }
    return {failures == 0, failures};
}

UlrichReport ulrich_check(const ExtensionPresentation& ext, const DeterminantalModel& model,
                          int window_hi) {
    const PrimeField& F = model.field;
    UlrichReport rep;
    if (window_hi < 0) window_hi = model.dm.t + model.dm.c + 2;
    rep.hilbert_window = {0, window_hi};

    rep.mu_E = generator_count(ext.assembled, F);
    long long deg = binom(model.dm.t + model.dm.c - 1, model.dm.c);
    rep.mu_expected = (long long)ext.rank * deg;
    rep.generator_count_ok = rep.mu_E == rep.mu_expected;

    rep.hilbert_additivity_ok = true;
    for (int nu = 0; nu <= window_hi; ++nu) {
        long long he = presentation_hilbert(ext.assembled, nu, F);
        long long hs = presentation_hilbert(ext.sub, nu, F);
        long long hq = presentation_hilbert(ext.quot, nu, F);
        if (he != hs + (long long)(ext.rank - 1) * hq) rep.hilbert_additivity_ok = false;
    }

    auto [ok, fails] = a_module_test(ext.assembled, model);
    rep.is_A_module = ok;
    rep.a_module_failures = fails;
    rep.numerically_consistent = rep.generator_count_ok && rep.hilbert_additivity_ok;
    return rep;
}

} // namespace detrep
