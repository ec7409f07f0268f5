#pragma once

#include <map>
#include <vector>

#include "hornrank/horn.hpp"

namespace hornrank {

// exact rational 2-vector with lexicographic order (used as y-exponent)
struct RatVec2 {
    Rat a, b;
    bool operator<(const RatVec2& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator==(const RatVec2& o) const { return a == o.a && b == o.b; }
};

// lattice point in the nonnegative quadrant (x-plane of a pair subsystem)
using XPoint = std::pair<long, long>;

// An independent opposite-open-quadrant pair of rows, oriented so that row i
// lies in the open first quadrant (coordinate inversions recorded in flip).
struct PairSystem {
    int i, j;              // row indices, i < j
    IntMatrix M;           // oriented 2x2 submatrix: row 0 = b_i, row 1 = b_j
    Rat ci, cj;            // parameters of the pair
    bool flip[2];          // true when the y-coordinate was inverted
    Int nu;
};

// Finite-support solution in the Horn variables; provenance kept for reporting.
struct PuiseuxPolynomial {
    std::map<RatVec2, Rat> terms;       // y-exponent -> coefficient
    int pair_i = -1, pair_j = -1;
    XPoint base_point{0, 0};            // in the oriented x-plane
    std::vector<XPoint> x_support;      // oriented pair-plane support
    std::map<XPoint, Rat> x_terms;      // pair-subsystem Taylor solution
};

// Lemma 6.3 pairs: independent rows in opposite open quadrants.
std::vector<PairSystem> admissible_pairs(const HornConfig& cfg);

// Lemma 6.4 base rectangle; |result| = nu.
std::vector<XPoint> base_rectangle(const PairSystem& ps);

// One finite support per base point: closure under moves by the columns of M
// inside N^2, pruned at the a-priori box bound; closure asserted post hoc.
std::vector<std::vector<XPoint>> enumerate_supports(const PairSystem& ps);

// Taylor solution of the constant-coefficient pair subsystem on one support,
// normalized to primitive integer form (lex-smallest support point positive).
std::map<XPoint, Rat> solve_coefficients(const std::vector<XPoint>& support, const PairSystem& ps);

// map the pair-plane support/solution into Horn y-coordinates
// (exponent alpha solves M*alpha = (u,v) - c_pair; coefficients carried over)
std::map<RatVec2, Rat> to_horn_variables(const std::map<XPoint, Rat>& xpoly, const PairSystem& ps);

// All Puiseux polynomial solutions of Horn(B, c): supports from the pair
// subsystems, coefficients from the full recurrences, annihilation verified.
std::vector<PuiseuxPolynomial> all_puiseux(const HornConfig& cfg);

// exact check: H_1 f = H_2 f = 0 termwise
bool annihilated_by_horn(const HornConfig& cfg, const std::map<RatVec2, Rat>& f);

}  // namespace hornrank
