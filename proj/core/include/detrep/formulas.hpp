#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace detrep {
namespace formulas {

// f, g, h evaluated through the alternating binomial sums and through the
// closed forms; both must agree (the struct carries both for the tests).
struct Fgh {
    mpz_class f_sum, g_sum, h_sum;
    mpz_class f_closed, g_closed, h_closed;
    bool agree() const {
        return f_sum == f_closed && g_sum == g_closed && h_sum == h_closed;
    }
};

Fgh fgh(int t, int c); // t >= 2, c >= 1; h := 0 for t = 2

// Upper bound for chi_d(L_21)(nu), nu in {0, -1, -2}; an equality when d = 2
// or 2 <= t <= 3.
mpz_class chi_bound(int t, int c, int d, int nu);

struct ChiBound {
    int t = 0, c = 0, d = 0;
    mpz_class at0, atm1, atm2;
    bool exact = false; // d == 2 or t <= 3
};

ChiBound chi_bound_all(int t, int c, int d);

// The displayed cubic criterion: negative value forces Ext^1(L_2, L_1) != 0.
// Equivalent to chi_bound(t, c, d, 0) < 0.
bool wild_criterion(int t, int c, int d);
mpz_class wild_criterion_value(int t, int c, int d);

// dim Ext^1(L_2, L_1) for hypersurfaces (c = 1): C(t,2)(n+1) - t^2.
long long ext1_c1(int t, int n);

// Curve case (d = 1, t >= 3): exact chi(L_1 (x) L_2^dual) and the cubic bound
// t(5 + 3t - 2t^2)/6; chi <= bound <= -2 and dim Ext^1 >= -chi.
struct CurveChi {
    mpz_class chi;
    mpz_class bound;
};
CurveChi curve_chi(int t, int n);

enum class Rep { Finite, Tame, UlrichWild, Wild, Unknown };

struct Verdict {
    Rep cls = Rep::Unknown;
    std::string justification;
};

const char* rep_name(Rep r);

// Representation-type classification of the linear determinantal scheme with
// parameters (t, c, n), n > c. Proved classifications only; conjectured cases
// come back Unknown with the conjecture cited.
Verdict verdict(int t, int c, int n);

} // namespace formulas
} // namespace detrep
