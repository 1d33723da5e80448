#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detrep/extengine.hpp"
#include "detrep/model.hpp"

namespace detrep {

// A graded module given by generators and relations, truncated from one of
// the standard resolutions; syz is kept when cocycle conditions need it.
struct ModulePresentation {
    GradedFreeModule gens;       // G0
    HomogMatrix rels;            // G1 -> G0
    std::optional<HomogMatrix> syz; // G2 -> G1
    std::string label;
    int n_vars = 0;

    bool minimal(const PrimeField& F) const; // no nonzero constant entries in rels
    ModulePresentation twisted(int s) const;
};

enum class StdModule { M, Mdual, SjM };

// Presentation of M, M^dual(s) or S_jM(s) truncated from phi, D_{-1}, or
// D_j / C_j respectively.
ModulePresentation presentation_of(const DeterminantalModel& model, StdModule which, int j = 0,
                                   int twist_s = 0);

// Hilbert function of the cokernel of a presentation at one degree.
long long presentation_hilbert(const ModulePresentation& mp, int nu, const PrimeField& F);

// Minimal number of generators: rank(gens) minus the rank of the constant
// part of rels (blocked by twist).
long long generator_count(const ModulePresentation& mp, const PrimeField& F);

// Basis bookkeeping for Hom(A, B)_0 as a K-vector space: coordinates are
// (target summand, source summand, monomial of the right degree).
struct HomSpace {
    GradedFreeModule src, tgt;
    int n_vars = 0;
    struct Coord {
        int p, q;
        Exps mono;
    };
    std::vector<Coord> coords;

    long long dim() const { return (long long)coords.size(); }
    HomogMatrix to_matrix(const std::vector<uint32_t>& v, const PrimeField& F) const;
    std::vector<uint32_t> from_matrix(const HomogMatrix& m) const;
};

HomSpace hom_space(const GradedFreeModule& src, const GradedFreeModule& tgt, int n_vars);

// Degree-0 classes of Ext^1_R(coker quot, coker sub): cocycles
// xi: H1 -> G0 with xi o d2 = 0 into the cokernel, modulo coboundaries.
// Every class is stored with its lift matrix.
struct CocycleSpace {
    long long dim = 0;
    std::vector<HomogMatrix> basis; // lift matrices H1 -> G0
    HomSpace w1;                    // Hom(H1, G0)_0
    EchelonBasis coboundaries;      // span of coboundary vectors inside w1

    CocycleSpace() : coboundaries(PrimeField{}) {}
};

CocycleSpace cocycle_space(const ModulePresentation& quot, const ModulePresentation& sub,
                           const PrimeField& F);

// The iterated extension 0 -> sub -> E -> quot^{r-1} -> 0 assembled as a
// block presentation [[p1, xi_1 .. xi_{r-1}], [0, p2 (+) ... (+) p2]].
struct ExtensionPresentation {
    ModulePresentation sub, quot;
    int rank = 1;
    std::vector<HomogMatrix> cocycles;
    ModulePresentation assembled;
    bool split_input = false; // all cocycles zero
};

// Throws std::invalid_argument when the cocycles are linearly dependent
// modulo coboundaries (an all-zero list is allowed and flags a split).
ExtensionPresentation build_extension(const ModulePresentation& sub,
                                      const ModulePresentation& quot,
                                      const std::vector<HomogMatrix>& cocycles,
                                      const CocycleSpace& space, const PrimeField& F);

struct UlrichReport {
    long long mu_E = 0;
    long long mu_expected = 0; // rank * deg X
    bool generator_count_ok = false;
    bool hilbert_additivity_ok = false;
    std::vector<int> hilbert_window; // [lo, hi]
    bool is_A_module = false;
    long long a_module_failures = 0; // (minor, generator) pairs failing I*E = 0
    bool numerically_consistent = false;
};

UlrichReport ulrich_check(const ExtensionPresentation& ext, const DeterminantalModel& model,
                          int window_hi = -1);

// I*E = 0 test: each maximal minor times each generator must land in the
// relation image, checked exactly degree by degree.
std::pair<bool, long long> a_module_test(const ModulePresentation& mp,
                                         const DeterminantalModel& model);

} // namespace detrep
