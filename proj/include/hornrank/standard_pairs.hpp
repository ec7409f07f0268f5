#pragma once

#include <set>
#include <vector>

#include "hornrank/horn.hpp"
#include "hornrank/poly.hpp"

namespace hornrank {

// Monomial ideal given by its minimal generators (antichain under divisibility).
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Exponent> gens);

    int nvars() const { return nvars_; }
    const std::vector<Exponent>& generators() const { return gens_; }
    bool contains(const Exponent& m) const;
    bool is_zero_ideal() const { return gens_.empty(); }

private:
    int nvars_;
    std::vector<Exponent> gens_;
};

struct StandardPair {
    Exponent eta;           // eta_i = 0 for i in sigma
    std::set<int> sigma;
    bool operator==(const StandardPair& o) const { return eta == o.eta && sigma == o.sigma; }
};

// Complete standard-pair list of a proper monomial ideal, deterministic order
// (sigma lexicographic, then eta lexicographic).
std::vector<StandardPair> standard_pairs(const MonomialIdeal& M);

// Pairs with |sigma| = nvars - codim (top dimensional for unmixed input).
std::vector<StandardPair> top_pairs(const MonomialIdeal& M, int codim);

// T(in_w(I)): top pairs whose complement rows of B are linearly independent.
std::vector<StandardPair> admissible_T(const MonomialIdeal& M, const IntMatrix& B);

// Lemma 4.5 count: top pairs with sigma = complement of {k, l}.
Int dependent_multiplicity(const MonomialIdeal& M, int k, int l);

struct ExponentRoot {
    RatVec v;
    StandardPair source;
};

// Proposition 8.6 roots: v with v_i = eta_i off sigma and A*v = A*c; requires
// distinct roots (GenericityFailure otherwise).
std::vector<ExponentRoot> exponent_roots(const std::vector<StandardPair>& pairs, const IntMatrix& A,
                                         const RatVec& c);

}  // namespace hornrank
