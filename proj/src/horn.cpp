#include "hornrank/horn.hpp"

#include <random>

namespace hornrank {

Quadrant quadrant_class(const Int& b1, const Int& b2) {
    if (b1 == 0 && b2 == 0) return Quadrant::Zero;
    if (b1 == 0 || b2 == 0) return Quadrant::Axis;
    if (b1 > 0) return b2 > 0 ? Quadrant::OpenQ1 : Quadrant::OpenQ4;
    return b2 > 0 ? Quadrant::OpenQ2 : Quadrant::OpenQ3;
}

bool opposite_open_quadrants(const IntVec& bi, const IntVec& bj) {
    if (bi[0] == 0 || bi[1] == 0 || bj[0] == 0 || bj[1] == 0) return false;
    return (bi[0] > 0) != (bj[0] > 0) && (bi[1] > 0) != (bj[1] > 0);
}

Int index_nu(const IntVec& bi, const IntVec& bj) {
    if (!opposite_open_quadrants(bi, bj)) return 0;
    Int a = abs(bi[0] * bj[1]);
    Int b = abs(bj[0] * bi[1]);
    return a < b ? a : b;
}

HornConfig::HornConfig(IntMatrix B, ParameterSpec params, Convention conv)
    : B_(std::move(B)), params_(std::move(params)), conv_(conv) {
    if (conv_ == Convention::Rising) {
        B_ = -B_;
        if (!params_.generic)
            for (auto& q : params_.explicit_c) q = -q;
    }
    if (B_.cols() != 2) throw std::invalid_argument("HornConfig: B must be n x 2");
    if (B_.rank() != 2) throw std::invalid_argument("HornConfig: rank(B) = 2 required");
    int n = B_.rows();
    if (n > 2) {
        for (int j = 0; j < 2; ++j) {
            Int s = 0;
            for (int i = 0; i < n; ++i) s += B_.at(i, j);
            if (s != 0) throw std::invalid_argument("HornConfig: column sums must vanish");
        }
        A_ = gale_dual(B_);
    }
    d_.assign(2, Int(0));
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            if (B_.at(i, j) > 0) d_[j] += B_.at(i, j);
    g_ = gcd_maximal_minors(B_);
    if (!params_.generic && int(params_.explicit_c.size()) != n)
        throw std::invalid_argument("HornConfig: parameter length != n");
    materialize_c();
}

const IntMatrix& HornConfig::A() const {
    if (n() <= 2) throw std::logic_error("HornConfig: A undefined for square B");
    return A_;
}

void HornConfig::materialize_c() {
    if (!params_.generic) {
        c_ = params_.explicit_c;
        return;
    }
    // generic c: numerators uniform in [10^6, 2*10^6], fixed prime denominator
    static const Int kPrime = 1000003;
    std::mt19937_64 rng(params_.seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL + std::uint64_t(resamples_));
    c_.clear();
    for (int j = 0; j < n(); ++j) {
        std::uint64_t p = 1000000 + rng() % 1000001;
        c_.emplace_back(Int(p), kPrime);
    }
}

void HornConfig::resample_parameters() {
    if (!params_.generic) throw GenericityFailure("explicit parameters are not generic enough");
    ++resamples_;
    materialize_c();
}

Rat HornConfig::eval_P(int i, const Rat& t1, const Rat& t2) const {
    Rat r = 1;
    for (int j = 0; j < n(); ++j) {
        const Int& bji = B_.at(j, i);
        if (bji >= 0) continue;
        Rat base = Rat(B_.at(j, 0)) * t1 + Rat(B_.at(j, 1)) * t2 + c_[j];
        for (Int l = 0; l < -bji; ++l) r *= base - Rat(l);
    }
    return r;
}

Rat HornConfig::eval_Q(int i, const Rat& t1, const Rat& t2) const {
    Rat r = 1;
    for (int j = 0; j < n(); ++j) {
        const Int& bji = B_.at(j, i);
        if (bji <= 0) continue;
        Rat base = Rat(B_.at(j, 0)) * t1 + Rat(B_.at(j, 1)) * t2 + c_[j];
        for (Int l = 0; l < bji; ++l) r *= base - Rat(l);
    }
    return r;
}

Int IndexTable::sum_dependent() const {
    Int s = 0;
    for (const auto& e : entries)
        if (e.opposite_open && e.dependent) s += e.nu;
    return s;
}

Int IndexTable::sum_independent() const {
    Int s = 0;
    for (const auto& e : entries)
        if (e.opposite_open && !e.dependent) s += e.nu;
    return s;
}

Int IndexTable::sum_all() const {
    Int s = 0;
    for (const auto& e : entries) s += e.nu;
    return s;
}

IndexTable index_table(const IntMatrix& B) {
    IndexTable t;
    for (int i = 0; i < B.rows(); ++i)
        for (int j = i + 1; j < B.rows(); ++j) {
            IndexEntry e;
            e.i = i;
            e.j = j;
            IntVec bi = B.row(i), bj = B.row(j);
            e.qi = quadrant_class(bi[0], bi[1]);
            e.qj = quadrant_class(bj[0], bj[1]);
            e.opposite_open = opposite_open_quadrants(bi, bj);
            e.dependent = (bi[0] * bj[1] - bi[1] * bj[0]) == 0;
            e.nu = index_nu(bi, bj);
            t.entries.push_back(std::move(e));
        }
    return t;
}

RankReport generic_rank(const HornConfig& cfg) {
    if (cfg.n() <= 2) throw std::invalid_argument("generic_rank: n > 2 required");
    IndexTable t = index_table(cfg.B());
    RankReport r;
    r.d1d2 = cfg.d1() * cfg.d2();
    r.sum_dep_nu = t.sum_dependent();
    r.sum_indep_nu = t.sum_independent();
    r.g = cfg.g();
    Int volg = r.d1d2 - t.sum_all();
    if (volg <= 0 || volg % r.g != 0)
        throw std::logic_error("generic_rank: non-integral volume (input violates preconditions)");
    r.vol_A = volg / r.g;
    r.rank = r.d1d2 - r.sum_dep_nu;
    r.identity_holds = (r.rank == r.g * r.vol_A + r.sum_indep_nu);
    if (!r.identity_holds) throw std::logic_error("generic_rank: identity violation");
    return r;
}

Int puiseux_rank(const HornConfig& cfg) {
    return index_table(cfg.B()).sum_independent();
}

IntVec alpha_vector(const IntMatrix& B) {
    if (B.rank() != 2) throw std::invalid_argument("alpha_vector: rank 2 required");
    IntVec alpha(B.rows(), Int(0));
    for (int i = 0; i < B.rows(); ++i) {
        if (B.at(i, 0) <= 0) continue;
        Int mx = 0;
        for (int j = 0; j < B.rows(); ++j) {
            if (j == i) continue;
            Int nu = index_nu(B.row(i), B.row(j));
            if (nu > mx) mx = nu;
        }
        alpha[i] = mx;
    }
    return alpha;
}

bool artinian_criterion(const IntMatrix& B) {
    if (B.rank() != 2) throw std::invalid_argument("artinian_criterion: rank 2 required");
    for (int i = 0; i < B.rows(); ++i)
        for (int j = i + 1; j < B.rows(); ++j) {
            IntVec bi = B.row(i), bj = B.row(j);
            if (opposite_open_quadrants(bi, bj) && bi[0] * bj[1] - bi[1] * bj[0] == 0) return false;
        }
    return true;
}

}  // namespace hornrank
