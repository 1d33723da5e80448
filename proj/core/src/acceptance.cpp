#include "detrep/acceptance.hpp"

#include <chrono>
#include <sstream>
#include <thread>

#include "detrep/extensions.hpp"
#include "detrep/formulas.hpp"
#include "detrep/paper_table.hpp"

namespace detrep {

namespace {

using Clock = std::chrono::steady_clock;
namespace fm = formulas;

struct Ctx {
    PrimeField F;
    int jobs = 1;
};

std::string triple(int t, int c, int x) {
    std::ostringstream os;
    os << "(" << t << "," << c << "," << x << ")";
    return os.str();
}

CriterionResult c1_fgh(const Ctx&) {
    CriterionResult r{1, "fgh sum form == closed form on 2<=t,c<=10", true, true, "", 0};
    for (int t = 2; t <= 10; ++t)
        for (int c = 1; c <= 10; ++c) {
            fm::Fgh v = fm::fgh(t, c);
            if (!v.agree()) {
                r.pass = false;
                r.detail = "mismatch at " + triple(t, c, 0);
                return r;
            }
        }
    return r;
}

CriterionResult c2_t2_identity(const Ctx&) {
    CriterionResult r{2, "chi_bound(2,c,d,0) == c+1-cd on 2<=c,d<=20", true, true, "", 0};
    for (int c = 2; c <= 20; ++c)
        for (int d = 2; d <= 20; ++d)
            if (fm::chi_bound(2, c, d, 0) != c + 1 - c * d) {
                r.pass = false;
                r.detail = "mismatch at c=" + std::to_string(c) + ", d=" + std::to_string(d);
                return r;
            }
    return r;
}

CriterionResult c3_table(const Ctx&) {
    CriterionResult r{3, "paper table reproduction incl. boundary failures", true, true, "", 0};
    auto checks = fm::check_paper_table(40);
    for (const auto& tc : checks)
        if (!tc.box_ok || !tc.boundary_ok) {
            r.pass = false;
            r.detail = "row [" + tc.row.str() + "]: " + tc.detail;
            return r;
        }
    r.detail = std::to_string(checks.size()) + " rows match";
    return r;
}

CriterionResult c4_distinguished(const Ctx&) {
    CriterionResult r{4, "chi_bound at (2,2,2),(2,3,2),(3,2,16) = -1,-2,-2", true, true, "", 0};
    r.pass = fm::chi_bound(2, 2, 2, 0) == -1 && fm::chi_bound(2, 3, 2, 0) == -2 &&
             fm::chi_bound(3, 2, 16, 0) == -2;
    if (!r.pass) r.detail = "distinguished value mismatch";
    return r;
}

CriterionResult c5_equality_regime(const Ctx& ctx) {
    CriterionResult r{5, "chi oracle == chi bound in the equality regime, 3 seeds", true, true, "",
                      0};
    const int triples[5][3] = {{2, 2, 4}, {2, 3, 5}, {3, 2, 4}, {3, 2, 5}, {3, 3, 5}};
    for (const auto& tc : triples)
        for (uint64_t seed = 1; seed <= 3; ++seed) {
            DeterminantalModel m =
                new_model(DegreeMatrix::linear(tc[0], tc[1]), tc[2], ctx.F, seed);
            for (int nu = -2; nu <= 0; ++nu) {
                long long oracle = chi_oracle(m, nu);
                mpz_class bound = fm::chi_bound(tc[0], tc[1], tc[2] - tc[1], nu);
                if (bound != oracle) {
                    r.pass = false;
                    r.detail = "mismatch at " + triple(tc[0], tc[1], tc[2]) + " nu=" +
                               std::to_string(nu) + " seed=" + std::to_string(seed) +
                               ": oracle=" + std::to_string(oracle) +
                               " bound=" + bound.get_str();
                    return r;
                }
            }
        }
    return r;
}

CriterionResult c6_quartic_scroll(const Ctx& ctx) {
    CriterionResult r{6, "quartic scroll (2,3,5): (ext0,ext1,ext2) = (0,2,0)", true, true, "", 0};
    DeterminantalModel m = new_model(DegreeMatrix::linear(2, 3), 5, ctx.F, 1);
    long long e0 = ext_L2_L1(m, 0, 0), e1 = ext_L2_L1(m, 1, 0), e2 = ext_L2_L1(m, 2, 0);
    r.pass = e0 == 0 && e1 == 2 && e2 == 0;
    std::ostringstream os;
    os << "(" << e0 << "," << e1 << "," << e2 << ")";
    r.detail = os.str();
    return r;
}

CriterionResult c7_c1_pins(const Ctx& ctx) {
    CriterionResult r{7, "c=1 pins: (3,3) -> 3 and (2,6) -> 3", true, true, "", 0};
    DeterminantalModel m33 = new_model(DegreeMatrix::linear(3, 1), 3, ctx.F, 1);
    DeterminantalModel m26 = new_model(DegreeMatrix::linear(2, 1), 6, ctx.F, 1);
    long long v33 = ext_L2_L1(m33, 1, 0);
    long long v26 = ext_L2_L1(m26, 1, 0);
    r.pass = v33 == 3 && v33 == fm::ext1_c1(3, 3) && v26 == 3 && v26 == fm::ext1_c1(2, 6);
    std::ostringstream os;
    os << "(3,3)->" << v33 << " (2,6)->" << v26;
    r.detail = os.str();
    return r;
}

CriterionResult c8_curves(const Ctx&) {
    CriterionResult r{8, "curve formulas: chi(3,3)=(-2,-2), p_a(3,3)=3, bound <= -2", true, true,
                      "", 0};
    fm::CurveChi cc = fm::curve_chi(3, 3);
    if (cc.chi != -2 || cc.bound != -2 || curve_genus(3, 3) != 3) {
        r.pass = false;
        r.detail = "pinned values mismatch";
        return r;
    }
    for (int t = 3; t <= 12; ++t)
        for (int n = 3; n <= 12; ++n) {
            fm::CurveChi v = fm::curve_chi(t, n);
            if (!(v.chi <= v.bound && v.bound <= -2)) {
                r.pass = false;
                r.detail = "bound property fails at t=" + std::to_string(t) +
                           ", n=" + std::to_string(n);
                return r;
            }
        }
    return r;
}

// size heuristic: largest rows*cols of any graded piece of the differentials
long long largest_piece(const GradedComplex& cx, int nu_hi) {
    long long mx = 0;
    for (int k = 0; k < cx.length(); ++k) {
        long long a = cx.modules[(size_t)k].piece_dim(nu_hi, cx.n_vars);
        long long b = cx.modules[(size_t)k + 1].piece_dim(nu_hi, cx.n_vars);
        mx = std::max(mx, a * b);
    }
    return mx;
}

CriterionResult c9_complexes(const Ctx& ctx) {
    CriterionResult r{9, "d^2 = 0 and sampled exactness on the t,c <= 3, n <= 5 grid", true, true,
                      "", 0};
    struct Task {
        int t, c, n;
    };
    std::vector<Task> tasks;
    for (int t = 2; t <= 3; ++t)
        for (int c = 1; c <= 3; ++c)
            for (int n = c; n <= 5; ++n) tasks.push_back({t, c, n});

    std::vector<std::string> errors((size_t)tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < tasks.size(); i = next++) {
            const auto [t, c, n] = tasks[i];
            std::ostringstream err;
            DeterminantalModel m = new_model(DegreeMatrix::linear(t, c), n, ctx.F, 1);
            int hi = t + c + 2;
            auto run_one = [&](const GradedComplex& cx, int depth_hint) {
                if (!verify_d_squared(cx, ctx.F)) {
                    err << cx.label << " d^2 != 0 at " << triple(t, c, n) << "; ";
                    return;
                }
                ExactnessReport ex =
                    largest_piece(cx, hi) > FieldMatrix::kDenseBudget
                        ? sampled_exactness_certified(cx, 0, hi, ctx.F, depth_hint,
                                                      m.seed * 1000003 + 17)
                        : sampled_exactness(cx, 0, hi, ctx.F);
                if (!ex.clean) {
                    err << cx.label << " homology at " << triple(t, c, n) << " pos "
                        << ex.failures[0].position << " nu " << ex.failures[0].nu << "; ";
                }
            };
            for (int i2 = -1; i2 <= c; ++i2) run_one(build_D(m, i2), n - c + 1);
            for (int i2 = 0; i2 <= 2 * c; ++i2) {
                int depth = i2 <= c ? n - c + 1
                                    : std::max(0, n + 1 - std::min(i2, t + c - 1));
                run_one(build_C(m, i2), depth);
            }
            // mutation control: one flipped entry must break d^2 = 0
            GradedComplex d0 = build_D(m, 0);
            if (d0.length() >= 2) {
                HomogMatrix& d1 = d0.diffs[0];
                HomogPoly e = d1.at(0, 0);
                HomogPoly bump = HomogPoly::monomial(m.n_vars(), monomial_basis(m.n_vars(), e.degree)[0], 1);
                d1.set(0, 0, poly_add(e, bump, ctx.F));
                if (verify_d_squared(d0, ctx.F))
                    err << "mutation not detected at " << triple(t, c, n) << "; ";
            }
            errors[i] = err.str();
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::max(1, ctx.jobs);
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::string all;
    for (const auto& e : errors) all += e;
    if (!all.empty()) {
        r.pass = false;
        r.detail = all;
    }
    return r;
}

CriterionResult c10_degree_betti(const Ctx& ctx) {
    CriterionResult r{10, "degree by finite differences and Betti ranks rho_i, t,c <= 4", true,
                      true, "", 0};
    for (int t = 2; t <= 4; ++t)
        for (int c = 1; c <= 4; ++c) {
            int n = c + 2;
            DeterminantalModel m = new_model(DegreeMatrix::linear(t, c), n, ctx.F, 1);
            GradedComplex d0 = build_D(m, 0);
            // Betti numbers of the left strand
            for (int i = 1; i <= c; ++i) {
                long long want = binom(c + t - 1, i + t - 1) * binom(i + t - 2, t - 1);
                if (d0.modules[(size_t)i].rank() != want) {
                    r.pass = false;
                    r.detail = "rho_" + std::to_string(i) + " mismatch at " + triple(t, c, n);
                    return r;
                }
                for (int u : d0.modules[(size_t)i].twists)
                    if (u != t + i - 1) {
                        r.pass = false;
                        r.detail = "twist of D_0 position " + std::to_string(i) +
                                   " not -(t+i-1) at " + triple(t, c, n);
                        return r;
                    }
            }
            // degree = d-th finite difference of the Euler characteristic
            int d = n - c;
            int nu0 = t + c + 4;
            long long diff = 0;
            for (int k = 0; k <= d; ++k) {
                long long h = euler_characteristic(d0, nu0 - k);
                diff += ((k % 2) ? -1 : 1) * binom(d, k) * h;
            }
            if (diff != binom(t + c - 1, c)) {
                r.pass = false;
                r.detail = "degree mismatch at " + triple(t, c, n) + ": got " +
                           std::to_string(diff);
                return r;
            }
        }
    return r;
}

CriterionResult c11_section3(const Ctx& ctx) {
    CriterionResult r{11, "section-3 pins: ext^1 = C(t+c-1,c+1), Homs vanish", true, true, "", 0};
    const int cases[2][3] = {{3, 2, 5}, {4, 2, 6}};
    for (const auto& tc : cases) {
        int t = tc[0], c = tc[1], n = tc[2];
        DeterminantalModel m = new_model(DegreeMatrix::linear(t, c), n, ctx.F, 1);
        int mu_used = t - m.dm.mu(); // mu = 2 in the linear case
        long long e1 = ext_M_Mdual(m, 1, 1, mu_used);
        long long e0 = ext_M_Mdual(m, 1, 0, mu_used);
        long long h0 = hom_Mdual_M(m, mu_used);
        if (e1 != binom(t + c - 1, c + 1) || e0 != 0 || h0 != 0) {
            r.pass = false;
            std::ostringstream os;
            os << "at " << triple(t, c, n) << ": ext1=" << e1 << " (want "
               << binom(t + c - 1, c + 1) << "), hom=" << e0 << "," << h0;
            r.detail = os.str();
            return r;
        }
    }
    return r;
}

CriterionResult c12_extension(const Ctx& ctx) {
    CriterionResult r{12, "extension numerics at (2,2,4): mu(E) = 6, additivity on [0,7]", true,
                      true, "", 0};
    DeterminantalModel m = new_model(DegreeMatrix::linear(2, 2), 4, ctx.F, 1);
    ModulePresentation L1 = presentation_of(m, StdModule::Mdual, 0, m.dm.t - 1);
    ModulePresentation L2 = presentation_of(m, StdModule::SjM, m.dm.c);
    CocycleSpace cs = cocycle_space(L2, L1, ctx.F);
    if (cs.dim < 1) {
        r.pass = false;
        r.detail = "cocycle space dim " + std::to_string(cs.dim) + " < 1";
        return r;
    }
    ExtensionPresentation e2 = build_extension(L1, L2, {cs.basis[0]}, cs, ctx.F);
    UlrichReport rep = ulrich_check(e2, m, 7);
    if (rep.mu_E != 6 || !rep.generator_count_ok || !rep.hilbert_additivity_ok) {
        r.pass = false;
        std::ostringstream os;
        os << "mu_E=" << rep.mu_E << " additivity=" << rep.hilbert_additivity_ok;
        r.detail = os.str();
        return r;
    }
    // rank 3 needs two independent classes; refusal must track the measured dim
    bool threw = false;
    try {
        std::vector<HomogMatrix> two = {cs.basis[0],
                                        cs.dim >= 2 ? cs.basis[1] : cs.basis[0]};
        build_extension(L1, L2, two, cs, ctx.F);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    bool expect_refusal = cs.dim < 2;
    if (threw != expect_refusal) {
        r.pass = false;
        r.detail = "rank-3 refusal inconsistent with measured dim " + std::to_string(cs.dim);
        return r;
    }
    r.detail = "cocycle dim = " + std::to_string(cs.dim) + ", mu(E) = 6";
    return r;
}

// independent re-derivation of the proved Ulrich-wild coverage
bool covered_by_paper(int t, int c, int d) {
    int n = c + d;
    if (d == 1 && t >= 3 && n >= 3) return true;                  // curves
    if (c == 1 && d >= 2 && t > 2 && n > 2) return true;          // hypersurfaces, t > 2
    if (c == 1 && d >= 2 && t == 2 && n > 5) return true;         // hypersurfaces, t = 2
    if (t == 2 && c >= 2 && d > 2) return true;
    if (t == 2 && c > 3 && d == 2) return true;
    if (t == 3 && c >= 2 && d >= 2 && n <= 12) return true;       // t = 3, n <= 12
    if (t >= 2 && c >= 2 && d >= 2 && fm::chi_bound(t, c, d, 0) <= -3) return true;
    return false;
}

CriterionResult c13_verdict(const Ctx&) {
    CriterionResult r{13, "verdict table on the t,c,d <= 6 grid", true, true, "", 0};
    for (int t = 1; t <= 6; ++t)
        for (int c = 1; c <= 6; ++c)
            for (int d = 1; d <= 6; ++d) {
                int n = c + d;
                fm::Verdict v = fm::verdict(t, c, n);
                bool exc_finite = t == 1 || (t == 2 && d == 1) || (t == 2 && c == 2 && d == 2);
                bool exc_tame = t == 2 && c == 3 && d == 2;
                if ((v.cls == fm::Rep::Finite) != exc_finite ||
                    (v.cls == fm::Rep::Tame) != exc_tame) {
                    r.pass = false;
                    r.detail = "finite/tame mismatch at " + triple(t, c, d) + ": " +
                               fm::rep_name(v.cls);
                    return r;
                }
                if (!exc_finite && !exc_tame && covered_by_paper(t, c, d) &&
                    v.cls != fm::Rep::UlrichWild) {
                    r.pass = false;
                    r.detail = "expected ulrich-wild at " + triple(t, c, d) + ", got " +
                               fm::rep_name(v.cls);
                    return r;
                }
            }
    return r;
}

CriterionResult c14_stretch(const Ctx& ctx) {
    CriterionResult r{14, "[stretch] scan oracle at (3,3,n=14): ext1 = 0", true, false, "", 0};
    DeterminantalModel m = new_model(DegreeMatrix::linear(3, 3), 14, ctx.F, 1);
    long long e1 = ext_L2_L1(m, 1, 0);
    r.pass = e1 == 0;
    r.detail = "ext1 = " + std::to_string(e1);
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(
    const AcceptOptions& opts, const std::function<void(const CriterionResult&)>& progress) {
    Ctx ctx{PrimeField(opts.prime), opts.jobs};
    std::vector<CriterionResult (*)(const Ctx&)> criteria = {
        c1_fgh,         c2_t2_identity, c3_table,    c4_distinguished, c5_equality_regime,
        c6_quartic_scroll, c7_c1_pins,  c8_curves,   c9_complexes,     c10_degree_betti,
        c11_section3,   c12_extension,  c13_verdict,
    };
    if (opts.include_stretch) criteria.push_back(c14_stretch);

    std::vector<CriterionResult> out;
    for (auto fn : criteria) {
        auto t0 = Clock::now();
        CriterionResult r;
        try {
            r = fn(ctx);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        out.push_back(r);
        if (progress) progress(out.back());
    }
    return out;
}

bool all_gating_passed(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (r.gating && !r.pass) return false;
    return true;
}

} // namespace detrep
