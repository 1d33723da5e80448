#include "detrep/formulas.hpp"

#include <stdexcept>

#include "detrep/combin.hpp"

namespace detrep {
namespace formulas {

namespace {

mpz_class mpz_binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

mpz_class mpz_fact(long long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)n);
    return r;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("formulas: closed-form division not exact");
    return q;
}

} // namespace

Fgh fgh(int t, int c) {
    if (t < 2 || c < 1) throw std::invalid_argument("fgh: t >= 2, c >= 1 required");
    Fgh v;
    for (int i = 0; i <= t - 1; ++i) {
        mpz_class term = mpz_binom(t + c - 1, t - i - 1) * mpz_binom(t + c - 1 - i, t - 1);
        mpz_class s = (i % 2 == 0) ? 1 : -1;
        v.f_sum += s * term * mpz_binom(c + 2 + i, i);
        if (i >= 1) v.g_sum += s * term * mpz_binom(c + 1 + i, i - 1);
        if (i >= 2) v.h_sum += s * term * mpz_binom(c + i, i - 2);
    }
    mpz_class C = c, T = t;
    mpz_class fnum = 4 + 12 * C + 8 * C * C - 5 * C * T - 7 * C * C * T - C * T * T + C * C * T * T;
    mpz_class gnum = C * (-2 - 4 * C - T + C * T);
    mpz_class hnum = C * C - C;
    mpz_class base = mpz_fact(c + t - 1);
    mpz_class den2 = 2 * mpz_fact(c + 2);
    v.f_closed = exact_div(fnum * base, den2 * mpz_fact(t - 1));
    v.g_closed = exact_div(gnum * base, den2 * mpz_fact(t - 2));
    v.h_closed = t == 2 ? 0 : exact_div(hnum * base, den2 * mpz_fact(t - 3));
    return v;
}

mpz_class chi_bound(int t, int c, int d, int nu) {
    if (t < 2 || c < 2 || d < 2)
        throw std::invalid_argument("chi_bound: t, c, d >= 2 required");
    Fgh v = fgh(t, c);
    switch (nu) {
        case 0:
            return mpz_binom(d - 1, 2) * v.h_closed + (d - 2) * v.g_closed + v.f_closed;
        case -1:
            return (d - 2) * v.h_closed + v.g_closed;
        case -2:
            return v.h_closed;
        default:
            throw std::invalid_argument("chi_bound: nu must be 0, -1 or -2");
    }
}

ChiBound chi_bound_all(int t, int c, int d) {
    ChiBound b;
    b.t = t;
    b.c = c;
    b.d = d;
    b.at0 = chi_bound(t, c, d, 0);
    b.atm1 = chi_bound(t, c, d, -1);
    b.atm2 = chi_bound(t, c, d, -2);
    b.exact = d == 2 || t <= 3;
    return b;
}

mpz_class wild_criterion_value(int t, int c, int d) {
    mpz_class C = c, T = t, D = d;
    mpz_class term1 = mpz_binom(d - 1, 2) * (C * C - C) * (T - 1) * (T - 2);
    mpz_class term2 = (D - 2) * C * (C * T - 2 - 4 * C - T) * (T - 1);
    mpz_class term3 =
        4 + 12 * C + 8 * C * C - 5 * C * T - 7 * C * C * T - C * T * T + C * C * T * T;
    return term1 + term2 + term3;
}

bool wild_criterion(int t, int c, int d) {
    if (t < 2 || c < 2 || d < 2)
        throw std::invalid_argument("wild_criterion: t, c, d >= 2 required");
    return wild_criterion_value(t, c, d) < 0;
}

long long ext1_c1(int t, int n) {
    if (t < 2 || n < 3) throw std::invalid_argument("ext1_c1: t >= 2, n >= 3 required");
    return binom(t, 2) * (n + 1) - (long long)t * t;
}

CurveChi curve_chi(int t, int n) {
    if (t < 3 || n < 3) throw std::invalid_argument("curve_chi: t >= 3, n >= 3 required");
    CurveChi r;
    mpz_class num = mpz_class(-1 - n * (t - 2) + t) * mpz_fact(n + t - 2);
    r.chi = exact_div(num, mpz_fact(n) * mpz_fact(t - 1));
    mpz_class T = t;
    r.bound = exact_div(T * (5 + 3 * T - 2 * T * T), 6);
    return r;
}

const char* rep_name(Rep r) {
    switch (r) {
        case Rep::Finite: return "finite";
        case Rep::Tame: return "tame";
        case Rep::UlrichWild: return "ulrich-wild";
        case Rep::Wild: return "wild";
        case Rep::Unknown: return "unknown";
    }
    return "unknown";
}

Verdict verdict(int t, int c, int n) {
    if (t < 1 || c < 1 || n <= c) throw std::invalid_argument("verdict: t, c >= 1, n > c required");
    const int d = n - c;

    if (t == 1) return {Rep::Finite, "P^{n-c}"};
    if (t == 2 && d == 1) return {Rep::Finite, "rational normal curve"};
    if (t == 2 && c == 2 && d == 2) return {Rep::Finite, "cubic scroll in P^4"};
    if (t == 2 && c == 3 && d == 2) return {Rep::Tame, "quartic scroll in P^5"};

    // curves
    if (d == 1 && t >= 3 && n >= 3) return {Rep::UlrichWild, "linear determinantal curve, t >= 3"};

    // hypersurfaces
    if (c == 1 && d >= 2) {
        if (t > 2 && n > 2) return {Rep::UlrichWild, "c = 1, t > 2"};
        if (t == 2 && n > 5) return {Rep::UlrichWild, "c = 1, t = 2, n > 5"};
    }

    if (t == 2 && c >= 2) {
        if (d > 2) return {Rep::UlrichWild, "t = 2, d > 2"};
        if (d == 2 && c > 3) return {Rep::UlrichWild, "t = 2, d = 2, c > 3"};
    }

    if (t == 3 && d >= 2 && c >= 2 && n <= 12) return {Rep::UlrichWild, "t = 3, n <= 12"};

    // chi-bound route: bound <= -3 pins dim Ext^1 > 2
    if (t >= 2 && c >= 2 && d >= 2 && chi_bound(t, c, d, 0) <= -3)
        return {Rep::UlrichWild, "chi bound forces dim Ext^1 > 2"};

    // ACM wildness for the linear case: t > 2 and dim X >= 2
    if (t > 2 && d >= 2) return {Rep::Wild, "linear case of the wildness theorem (t > 2)"};

    return {Rep::Unknown, "conjectured Ulrich-wild, not covered by a proved case"};
}

} // namespace formulas
} // namespace detrep
