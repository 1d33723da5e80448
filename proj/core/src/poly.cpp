#include "detrep/poly.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "detrep/combin.hpp"

namespace detrep {

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
    int da = exps_degree(a), db = exps_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographic on exponent vectors, x0 first
}

int exps_degree(const Exps& e) {
    int d = 0;
    for (uint8_t x : e) d += x;
    return d;
}

namespace {

void gen_monomials(int n_vars, int d, Exps& cur, int pos, std::vector<Exps>& out) {
    if (pos == n_vars - 1) {
        cur[pos] = (uint8_t)d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = (uint8_t)e;
        gen_monomials(n_vars, d - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

struct BasisCache {
    std::vector<Exps> monos;
    std::map<Exps, int> index;
};

std::mutex g_basis_mutex;
std::unordered_map<uint64_t, BasisCache> g_basis_cache;

const BasisCache& basis_cache(int n_vars, int d) {
    uint64_t key = ((uint64_t)n_vars << 32) | (uint32_t)d;
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto it = g_basis_cache.find(key);
    if (it != g_basis_cache.end()) return it->second;
    BasisCache bc;
    Exps cur(n_vars, 0);
    gen_monomials(n_vars, d, cur, 0, bc.monos);
    for (size_t i = 0; i < bc.monos.size(); ++i) bc.index[bc.monos[i]] = (int)i;
    return g_basis_cache.emplace(key, std::move(bc)).first->second;
}

} // namespace

const std::vector<Exps>& monomial_basis(int n_vars, int d) {
    if (n_vars < 1 || d < 0) throw std::invalid_argument("monomial_basis: bad arguments");
    return basis_cache(n_vars, d).monos;
}

int monomial_index(int n_vars, const Exps& e) {
    const auto& bc = basis_cache(n_vars, exps_degree(e));
    auto it = bc.index.find(e);
    if (it == bc.index.end()) throw std::logic_error("monomial_index: monomial not in basis");
    return it->second;
}

HomogPoly HomogPoly::constant(int nv, uint32_t c, const PrimeField& F) {
    HomogPoly f(nv, 0);
    uint32_t r = c % F.p;
    if (r) f.terms[Exps(nv, 0)] = r;
    return f;
}

HomogPoly HomogPoly::variable(int nv, int i) {
    HomogPoly f(nv, 1);
    Exps e(nv, 0);
    e[i] = 1;
    f.terms[e] = 1;
    return f;
}

HomogPoly HomogPoly::monomial(int nv, const Exps& e, uint32_t c) {
    HomogPoly f(nv, exps_degree(e));
    if (c) f.terms[e] = c;
    return f;
}

void HomogPoly::add_term(const Exps& e, uint32_t c, const PrimeField& F) {
    if (exps_degree(e) != degree) throw std::logic_error("add_term: degree mismatch");
    auto it = terms.find(e);
    uint32_t v = F.add(it == terms.end() ? 0 : it->second, c % F.p);
    if (v == 0) {
        if (it != terms.end()) terms.erase(it);
    } else {
        terms[e] = v;
    }
}

HomogPoly poly_add(const HomogPoly& f, const HomogPoly& g, const PrimeField& F) {
    if (f.n_vars != g.n_vars) throw std::invalid_argument("poly_add: variable count mismatch");
    if (!f.is_zero() && !g.is_zero() && f.degree != g.degree)
        throw std::invalid_argument("poly_add: degree mismatch");
    HomogPoly r = f;
    if (r.is_zero()) r.degree = g.degree;
    for (const auto& [e, c] : g.terms) r.add_term(e, c, F);
    return r;
}

HomogPoly poly_sub(const HomogPoly& f, const HomogPoly& g, const PrimeField& F) {
    return poly_add(f, poly_scale(g, F.p - 1, F), F);
}

HomogPoly poly_scale(const HomogPoly& f, uint32_t c, const PrimeField& F) {
    HomogPoly r(f.n_vars, f.degree);
    c %= F.p;
    if (c == 0) return r;
    for (const auto& [e, v] : f.terms) r.terms[e] = F.mul(v, c);
    return r;
}

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g, const PrimeField& F) {
    if (f.n_vars != g.n_vars) throw std::invalid_argument("poly_mul: variable count mismatch");
    HomogPoly r(f.n_vars, f.degree + g.degree);
    for (const auto& [ef, cf] : f.terms)
        for (const auto& [eg, cg] : g.terms) {
            Exps e(f.n_vars);
            for (int i = 0; i < f.n_vars; ++i) e[i] = (uint8_t)(ef[i] + eg[i]);
            r.add_term(e, F.mul(cf, cg), F);
        }
    return r;
}

bool poly_equal(const HomogPoly& f, const HomogPoly& g) {
    if (f.is_zero() && g.is_zero()) return true;
    return f.n_vars == g.n_vars && f.degree == g.degree && f.terms == g.terms;
}

HomogPoly random_form(int n_vars, int d, Rng& rng, const PrimeField& F) {
    HomogPoly f(n_vars, d);
    for (const Exps& e : monomial_basis(n_vars, d)) {
        uint32_t c = rng.below(F.p);
        if (c) f.terms[e] = c;
    }
    return f;
}

HomogPoly substitute_last_var(const HomogPoly& f, const std::vector<uint32_t>& lambda,
                              const PrimeField& F) {
    int nv = f.n_vars;
    if ((int)lambda.size() != nv - 1)
        throw std::invalid_argument("substitute_last_var: lambda size mismatch");
    HomogPoly r(nv - 1, f.degree);
    // (sum lambda_i x_i)^k expanded once per needed power
    std::vector<HomogPoly> pw;
    HomogPoly lin(nv - 1, 1);
    for (int i = 0; i < nv - 1; ++i)
        if (lambda[i] % F.p) lin.add_term(HomogPoly::variable(nv - 1, i).terms.begin()->first,
                                          lambda[i], F);
    pw.push_back(HomogPoly::constant(nv - 1, 1, F));
    for (const auto& [e, c] : f.terms) {
        int k = e[nv - 1];
        while ((int)pw.size() <= k) pw.push_back(poly_mul(pw.back(), lin, F));
        Exps head(e.begin(), e.end() - 1);
        HomogPoly t = poly_mul(HomogPoly::monomial(nv - 1, head, c), pw[k], F);
        r = poly_add(r, t, F);
    }
    return r;
}

std::string HomogPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (int i = 0; i < n_vars; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << (int)e[i];
        }
    }
    return os.str();
}

} // namespace detrep
