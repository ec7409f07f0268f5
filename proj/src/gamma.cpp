#include "hornrank/gamma.hpp"

#include <random>

#include "hornrank/groebner.hpp"

namespace hornrank {

IntVec TruncatedGammaSeries::u_of(const ZPoint& z) const {
    IntVec u(lattice.rows());
    for (int i = 0; i < lattice.rows(); ++i)
        u[i] = lattice.at(i, 0) * Int(z.first) + lattice.at(i, 1) * Int(z.second);
    return u;
}

bool nv_member(const RatVec& v, const IntVec& u) {
    for (size_t i = 0; i < v.size(); ++i) {
        Rat w = v[i] + Rat(u[i]);
        if (is_negative_integer(v[i]) != is_negative_integer(w)) return false;
        if (is_nonnegative_integer(v[i]) != is_nonnegative_integer(w)) return false;
    }
    return true;
}

Rat gamma_coefficient(const RatVec& v, const IntVec& u) {
    Rat numer = 1, denom = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (u[i] < 0) {
            // [v]_{u-}: product (v_i - j + 1), j = 1..-u_i
            for (Int j = 1; j <= -u[i]; ++j) numer *= v[i] - Rat(j - 1);
        } else if (u[i] > 0) {
            // [v+u]_{u+}: product (v_i + j), j = 1..u_i
            for (Int j = 1; j <= u[i]; ++j) denom *= v[i] + Rat(j);
        }
    }
    if (denom == 0) throw GenericityFailure("gamma_coefficient: zero denominator inside window");
    return numer / denom;
}

TruncatedGammaSeries build_phi(const RatVec& v, const IntMatrix& lattice, long window) {
    TruncatedGammaSeries s;
    s.v = v;
    s.lattice = lattice;
    s.window = window;
    for (long z1 = -window; z1 <= window; ++z1)
        for (long z2 = -(window - std::abs(z1)); z2 <= window - std::abs(z1); ++z2) {
            ZPoint z{z1, z2};
            IntVec u = s.u_of(z);
            if (std::abs(z1) + std::abs(z2) + 1 > window) s.frontier.insert(z);
            if (!nv_member(v, u)) continue;
            s.coeffs[z] = gamma_coefficient(v, u);
        }
    return s;
}

CosetSplit coset_split(const TruncatedGammaSeries& series, const LatticeQuotient& quotient,
                       const IntMatrix& B) {
    CosetSplit split;
    split.parent = series;
    split.parts.assign(quotient.coset_reps.size(), TruncatedGammaSeries{});
    for (size_t l = 0; l < quotient.coset_reps.size(); ++l) {
        split.parts[l].v = series.v;
        split.parts[l].lattice = series.lattice;
        split.parts[l].window = series.window;
        split.parts[l].frontier = series.frontier;
    }
    for (const auto& [z, c] : series.coeffs) {
        IntVec u = series.u_of(z);
        int found = -1;
        for (size_t l = 0; l < quotient.coset_reps.size(); ++l) {
            IntVec diff(u.size());
            for (size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - quotient.coset_reps[l][i];
            if (solve_integer(B, diff)) {
                if (found >= 0) throw std::logic_error("coset_split: representatives not distinct");
                found = int(l);
            }
        }
        if (found < 0) throw std::logic_error("coset_split: support point outside the coset union");
        split.parts[found].coeffs[z] = c;
    }
    return split;
}

HornSeries to_horn_series(const TruncatedGammaSeries& series, const IntMatrix& B, const RatVec& c) {
    if (!(series.lattice == B))
        throw std::invalid_argument("to_horn_series: series lattice must be spanned by B");
    RatVec rhs(B.rows());
    for (int i = 0; i < B.rows(); ++i) rhs[i] = series.v[i] - c[i];
    auto alpha = solve_rational(B, rhs);
    if (!alpha) throw NotInColumnSpace("to_horn_series: v - c outside the column space of B");
    HornSeries h;
    h.alpha = RatVec2{(*alpha)[0], (*alpha)[1]};
    h.window = series.window;
    h.coeffs = series.coeffs;
    return h;
}

VerifyReport verify_annihilation(const TruncatedGammaSeries& series, const IntMatrix& A,
                                 const RatVec& c, const std::vector<std::pair<IntVec, ZPoint>>& ops) {
    VerifyReport rep;
    int n = series.lattice.rows();
    // Euler operators: A*(v+u) = A*c per stored term
    for (const auto& [z, coeff] : series.coeffs) {
        IntVec u = series.u_of(z);
        for (int i = 0; i < A.rows(); ++i) {
            Rat lhs = 0;
            for (int j = 0; j < n; ++j) lhs += Rat(A.at(i, j)) * (series.v[j] + Rat(u[j]));
            Rat rhs = 0;
            for (int j = 0; j < n; ++j) rhs += Rat(A.at(i, j)) * c[j];
            ++rep.euler_checked;
            if (lhs != rhs)
                rep.violations.push_back("euler row " + std::to_string(i) + " at z=(" +
                                         std::to_string(z.first) + "," + std::to_string(z.second) + ")");
        }
    }
    // lattice operators: for T_w with z-shift zw, constraint pairs (z, z + zw)
    auto falling = [&](const RatVec& base, const IntVec& expv) {
        Rat r = 1;
        for (int i = 0; i < n; ++i)
            for (Int l = 0; l < expv[i]; ++l) r *= base[i] - Rat(l);
        return r;
    };
    auto coeff_at = [&](const ZPoint& z) -> Rat {
        auto it = series.coeffs.find(z);
        return it == series.coeffs.end() ? Rat(0) : it->second;
    };
    auto in_window = [&](const ZPoint& z) {
        return std::abs(z.first) + std::abs(z.second) <= series.window;
    };
    for (const auto& [w, zw] : ops) {
        IntVec wplus(n), wminus(n);
        for (int i = 0; i < n; ++i) {
            wplus[i] = w[i] > 0 ? w[i] : Int(0);
            wminus[i] = w[i] < 0 ? -w[i] : Int(0);
        }
        for (long z1 = -series.window; z1 <= series.window; ++z1)
            for (long z2 = -(series.window - std::abs(z1)); z2 <= series.window - std::abs(z1); ++z2) {
                ZPoint za{z1, z2};                              // carries w_+ factor
                ZPoint zb{z1 - zw.first, z2 - zw.second};       // carries w_- factor
                if (!in_window(zb)) {
                    ++rep.frontier_skipped;
                    continue;
                }
                IntVec ua = series.u_of(za), ub = series.u_of(zb);
                RatVec va(n), vb(n);
                for (int i = 0; i < n; ++i) {
                    va[i] = series.v[i] + Rat(ua[i]);
                    vb[i] = series.v[i] + Rat(ub[i]);
                }
                Rat lhs = coeff_at(za) * falling(va, wplus);
                Rat rhs = coeff_at(zb) * falling(vb, wminus);
                ++rep.lattice_checked;
                if (lhs != rhs)
                    rep.violations.push_back("lattice op at z=(" + std::to_string(z1) + "," +
                                             std::to_string(z2) + ")");
            }
    }
    return rep;
}

VerifyReport verify_annihilation(const TruncatedGammaSeries& series, const IntMatrix& A,
                                 const RatVec& c) {
    std::vector<std::pair<IntVec, ZPoint>> ops;
    ops.emplace_back(series.lattice.col(0), ZPoint{1, 0});
    ops.emplace_back(series.lattice.col(1), ZPoint{0, 1});
    return verify_annihilation(series, A, c, ops);
}

WeightedInitial generic_initial_ideal(const std::vector<SparsePolynomial>& gens, int nvars,
                                      std::uint64_t seed, int cap) {
    std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
    for (int attempt = 0; attempt < cap; ++attempt) {
        std::vector<long long> w(nvars);
        for (auto& x : w) x = 1 + (long long)(rng() % 65536);
        InitialIdeal init = initial_ideal(gens, w);
        if (init.generic)
            return WeightedInitial{std::move(w), MonomialIdeal(nvars, std::move(init.generators)), attempt};
    }
    throw ResourceExhausted("generic_initial_ideal: weight resample cap exceeded");
}

FullBasis full_basis(const HornConfig& cfg, long window) {
    FullBasis fb;
    int n = cfg.n();
    IndexTable tbl = index_table(cfg.B());
    fb.expected_puiseux = tbl.sum_independent();
    Int volg = cfg.d1() * cfg.d2() - tbl.sum_all();
    fb.expected_series = volg;  // = g * vol(A)

    auto ib_gens = saturate_lattice_ideal(cfg.B());
    WeightedInitial wi = generic_initial_ideal(ib_gens, n, cfg.seed() + 17);
    fb.weight = wi.weight;
    fb.weight_resamples = wi.resamples;

    auto tops = top_pairs(wi.ideal, 2);
    if (Int(tops.size()) != fb.expected_series)
        throw std::logic_error("full_basis: top pair count != g*vol(A)");
    // top pairs of in_w(I_B) always have independent complement rows
    for (const auto& p : tops) {
        std::vector<int> comp;
        for (int v = 0; v < n; ++v)
            if (!p.sigma.count(v)) comp.push_back(v);
        Int det = cfg.B().at(comp[0], 0) * cfg.B().at(comp[1], 1) -
                  cfg.B().at(comp[0], 1) * cfg.B().at(comp[1], 0);
        if (det == 0) throw std::logic_error("full_basis: dependent complement in in_w(I_B) top pair");
    }

    IntMatrix A = cfg.n() > 2 ? cfg.A() : IntMatrix(0, 2);
    fb.roots = exponent_roots(tops, A, cfg.c());
    // Theorem 9.1 genericity: no negative integer coordinates in any root
    for (const auto& r : fb.roots)
        for (const auto& vi : r.v)
            if (is_negative_integer(vi))
                throw GenericityFailure("full_basis: root with negative integer coordinate");
    // support disjointness: no two roots may differ by an element of L_B
    // (differences inside L \ L_B are the coset structure and are expected)
    for (size_t i = 0; i < fb.roots.size(); ++i)
        for (size_t j = i + 1; j < fb.roots.size(); ++j) {
            bool all_int = true;
            IntVec diff(fb.roots[i].v.size());
            for (size_t k = 0; k < fb.roots[i].v.size(); ++k) {
                Rat d = fb.roots[i].v[k] - fb.roots[j].v[k];
                if (!is_integer(d)) { all_int = false; break; }
                diff[k] = num(d);
            }
            if (all_int && solve_integer(cfg.B(), diff))
                throw GenericityFailure("full_basis: roots in the same support class");
        }

    for (const auto& r : fb.roots) {
        TruncatedGammaSeries s = build_phi(r.v, cfg.B(), window);
        VerifyReport rep = verify_annihilation(s, A, cfg.c());
        if (!rep.ok()) throw std::logic_error("full_basis: series fails exact verification: " + rep.violations.front());
        fb.horn.push_back(to_horn_series(s, cfg.B(), cfg.c()));
        fb.series.push_back(std::move(s));
    }

    fb.puiseux = all_puiseux(cfg);
    if (Int(fb.puiseux.size()) != fb.expected_puiseux)
        throw std::logic_error("full_basis: puiseux count mismatch");

    // Independence of the basis needs each truncated series to witness its
    // full support (a finite Puiseux polynomial can never be a combination of
    // fully supported series with pairwise disjoint supports).
    if (window >= 4)
        for (const auto& s : fb.series)
            if (s.coeffs.size() < 2)
                throw GenericityFailure("full_basis: series support collapsed inside the window");
    return fb;
}

}  // namespace hornrank
