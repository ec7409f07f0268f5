#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hornrank/intmatrix.hpp"
#include "hornrank/rational.hpp"

namespace hornrank {

// thrown when a sampled parameter/weight turns out non-generic; the driver resamples
struct GenericityFailure : std::runtime_error {
    explicit GenericityFailure(const std::string& what) : std::runtime_error(what) {}
};

enum class Quadrant { OpenQ1, OpenQ2, OpenQ3, OpenQ4, Axis, Zero };

Quadrant quadrant_class(const Int& b1, const Int& b2);

// true iff both rows have all coordinates nonzero and componentwise opposite signs
bool opposite_open_quadrants(const IntVec& bi, const IntVec& bj);

// Definition 2.3 index: min(|b_i1 b_j2|, |b_j1 b_i2|) on interior opposite rows, else 0
Int index_nu(const IntVec& bi, const IntVec& bj);

enum class Convention { Falling, Rising };

struct ParameterSpec {
    bool generic = true;
    std::uint64_t seed = 0;
    RatVec explicit_c;  // used when generic == false
};

// The root object: B, c and the derived Gale data.
class HornConfig {
public:
    // B is n x 2 of rank 2; zero column sums enforced when n > 2 (the square
    // case is admitted for the constant-coefficient systems). Rising
    // convention is realized as (B, c) -> (-B, -c) before anything else.
    HornConfig(IntMatrix B, ParameterSpec params, Convention conv = Convention::Falling);

    int n() const { return B_.rows(); }
    const IntMatrix& B() const { return B_; }
    const IntMatrix& A() const;  // only when n > 2
    bool has_A() const { return n() > 2; }
    const RatVec& c() const { return c_; }
    const Int& g() const { return g_; }
    const Int& d1() const { return d_[0]; }
    const Int& d2() const { return d_[1]; }
    Convention convention() const { return conv_; }
    std::uint64_t seed() const { return params_.seed; }
    bool generic_parameters() const { return params_.generic; }

    IntVec row(int i) const { return B_.row(i); }

    // draw a fresh generic c (resample counter bumps the derived seed)
    void resample_parameters();
    int resample_count() const { return resamples_; }

    // evaluate the Horn operator coefficient polynomials at a rational point
    // theta = (t1, t2): P_i = prod_{b_ji < 0} prod_l (b_j . theta + c_j - l),
    // Q_i = prod_{b_ji > 0} prod_l (b_j . theta + c_j - l), l = 0..|b_ji|-1.
    Rat eval_P(int i, const Rat& t1, const Rat& t2) const;
    Rat eval_Q(int i, const Rat& t1, const Rat& t2) const;

private:
    IntMatrix B_;
    IntMatrix A_;
    RatVec c_;
    IntVec d_;
    Int g_;
    ParameterSpec params_;
    Convention conv_;
    int resamples_ = 0;

    void materialize_c();
};

struct IndexEntry {
    int i, j;             // i < j
    Quadrant qi, qj;
    bool opposite_open;   // interiors of opposite quadrants
    bool dependent;       // det B[i,j] == 0
    Int nu;
};

struct IndexTable {
    std::vector<IndexEntry> entries;  // all pairs i < j
    Int sum_dependent() const;
    Int sum_independent() const;
    Int sum_all() const;
};

IndexTable index_table(const IntMatrix& B);

struct RankReport {
    Int d1d2;
    Int sum_dep_nu, sum_indep_nu;
    Int g;
    Int vol_A;
    Int rank;
    bool identity_holds;
};

// Theorem 2.4 closed form, both sides computed; throws on violated preconditions.
RankReport generic_rank(const HornConfig& cfg);

// Theorem 6.5: sum of nu over independent opposite-open-quadrant pairs
Int puiseux_rank(const HornConfig& cfg);

// Proposition 4.3 vector: alpha_i = max_j nu_ij when b_i1 > 0, else 0
IntVec alpha_vector(const IntMatrix& B);

// Lemma 11.1 predicate: no linearly dependent rows in opposite open quadrants
bool artinian_criterion(const IntMatrix& B);

}  // namespace hornrank
