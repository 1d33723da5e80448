#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "detrep/gf.hpp"

namespace detrep {

// Exponent vector of a monomial; size = number of variables.
using Exps = std::vector<uint8_t>;

// Graded-lex order, x0 dominant: higher total degree first, then larger
// leading exponents first. Within one homogeneous degree this is plain lex.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

int exps_degree(const Exps& e);

// All monomials of total degree d in n_vars variables, in graded-lex order
// (descending lex, x0^d first). Deterministic; memoized.
const std::vector<Exps>& monomial_basis(int n_vars, int d);

// Index of a monomial inside monomial_basis(n_vars, deg(e)).
int monomial_index(int n_vars, const Exps& e);

// Deterministic RNG used everywhere a seed appears. mt19937_64 has a fully
// specified sequence, so results are reproducible across platforms.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint32_t below(uint32_t m) { return (uint32_t)(eng() % m); }
};

// A homogeneous multivariate polynomial over GF(p). The zero polynomial has
// empty terms and keeps the nominal degree of its slot, so degree bookkeeping
// in matrices never special-cases it.
struct HomogPoly {
    int n_vars = 0;
    int degree = 0;
    std::map<Exps, uint32_t, GrlexLess> terms; // no zero coefficients stored

    HomogPoly() = default;
    HomogPoly(int nv, int d) : n_vars(nv), degree(d) {}

    bool is_zero() const { return terms.empty(); }

    static HomogPoly zero(int nv, int d) { return HomogPoly(nv, d); }
    static HomogPoly constant(int nv, uint32_t c, const PrimeField& F);
    static HomogPoly variable(int nv, int i);
    static HomogPoly monomial(int nv, const Exps& e, uint32_t c);

    void add_term(const Exps& e, uint32_t c, const PrimeField& F);

    std::string str() const;
};

HomogPoly poly_add(const HomogPoly& f, const HomogPoly& g, const PrimeField& F);
HomogPoly poly_sub(const HomogPoly& f, const HomogPoly& g, const PrimeField& F);
HomogPoly poly_scale(const HomogPoly& f, uint32_t c, const PrimeField& F);
HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g, const PrimeField& F);
bool poly_equal(const HomogPoly& f, const HomogPoly& g);

// All C(n_vars-1+d, d) coefficients drawn independently; deterministic in rng.
HomogPoly random_form(int n_vars, int d, Rng& rng, const PrimeField& F);

// Substitute the last variable by the linear form sum(lambda[i] * x_i) in the
// remaining variables; result lives in n_vars-1 variables. Used for generic
// hyperplane cuts.
HomogPoly substitute_last_var(const HomogPoly& f, const std::vector<uint32_t>& lambda,
                              const PrimeField& F);

} // namespace detrep
