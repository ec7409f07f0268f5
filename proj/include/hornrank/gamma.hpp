#pragma once

#include <map>
#include <set>
#include <vector>

#include "hornrank/horn.hpp"
#include "hornrank/puiseux.hpp"
#include "hornrank/standard_pairs.hpp"

namespace hornrank {

struct NotInColumnSpace : std::runtime_error {
    explicit NotInColumnSpace(const std::string& what) : std::runtime_error(what) {}
};

using ZPoint = std::pair<long, long>;

// Truncated formal series x^v sum_{u in N_v} [v]_{u-}/[v+u]_{u+} x^u with the
// support lattice parametrized as u = L*z, z in Z^2, |z|_1 <= window.
struct TruncatedGammaSeries {
    RatVec v;
    IntMatrix lattice;              // n x 2, columns span the support lattice
    long window = 0;
    std::map<ZPoint, Rat> coeffs;   // only u in N_v stored; coeff at 0 is 1
    std::set<ZPoint> frontier;      // window points with a z +- e_k neighbor outside

    IntVec u_of(const ZPoint& z) const;
};

// N_v membership (u integral, v arbitrary rational vector)
bool nv_member(const RatVec& v, const IntVec& u);

// exact coefficient [v]_{u-} / [v+u]_{u+}
Rat gamma_coefficient(const RatVec& v, const IntVec& u);

TruncatedGammaSeries build_phi(const RatVec& v, const IntMatrix& lattice, long window);

struct CosetSplit {
    TruncatedGammaSeries parent;
    std::vector<TruncatedGammaSeries> parts;  // one per coset rep, same order
};

// Theorem 5.3 splitting along cosets of L_B inside the support lattice of the series.
CosetSplit coset_split(const TruncatedGammaSeries& series, const LatticeQuotient& quotient,
                       const IntMatrix& B);

struct HornSeries {
    RatVec2 alpha;                 // leading exponent, B*alpha = v - c
    std::map<ZPoint, Rat> coeffs;  // term z |-> coefficient of y^(alpha+z)
    long window = 0;
};

HornSeries to_horn_series(const TruncatedGammaSeries& series, const IntMatrix& B, const RatVec& c);

struct VerifyReport {
    long euler_checked = 0;
    long lattice_checked = 0;
    long frontier_skipped = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Euler operators (A.theta - A.c) per stored term, exact; lattice operators
// T_w for each w in ops (given with their z-plane shifts), interior constraints
// only, frontier-touching constraints counted and excluded.
VerifyReport verify_annihilation(const TruncatedGammaSeries& series, const IntMatrix& A,
                                 const RatVec& c, const std::vector<std::pair<IntVec, ZPoint>>& ops);

// shorthand: the canonical lattice operators (columns of the series lattice)
VerifyReport verify_annihilation(const TruncatedGammaSeries& series, const IntMatrix& A,
                                 const RatVec& c);

struct FullBasis {
    std::vector<ExponentRoot> roots;
    std::vector<TruncatedGammaSeries> series;
    std::vector<HornSeries> horn;
    std::vector<PuiseuxPolynomial> puiseux;
    std::vector<long long> weight;
    int weight_resamples = 0;
    Int expected_series;   // g * vol(A)
    Int expected_puiseux;  // sum of independent nu
};

// Theorem 9.2 basis: g*vol(A) truncated series plus the Puiseux polynomials.
FullBasis full_basis(const HornConfig& cfg, long window);

// generic weight sampling with the non-generic-initial-ideal resample loop
struct WeightedInitial {
    std::vector<long long> weight;
    MonomialIdeal ideal;
    int resamples;
};
WeightedInitial generic_initial_ideal(const std::vector<SparsePolynomial>& gens, int nvars,
                                      std::uint64_t seed, int cap = 32);

}  // namespace hornrank
