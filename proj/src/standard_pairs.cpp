#include "hornrank/standard_pairs.hpp"

#include <algorithm>

namespace hornrank {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponent> gens) : nvars_(nvars) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
        bool min = true;
        for (const auto& h : gens)
            if (h != g && divides(h, g)) { min = false; break; }
        if (min) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Exponent& m) const {
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

namespace {

// generators projected to the coordinates outside sigma (variables in sigma
// become free); 1 in the projection kills the slice
struct Projection {
    std::vector<int> free_vars;       // complement of sigma, ascending
    std::vector<Exponent> gens;       // projected minimal generators
    bool contains_one = false;
};

Projection project(const MonomialIdeal& M, const std::set<int>& sigma) {
    Projection pr;
    for (int v = 0; v < M.nvars(); ++v)
        if (!sigma.count(v)) pr.free_vars.push_back(v);
    std::vector<Exponent> raw;
    for (const auto& g : M.generators()) {
        Exponent p(pr.free_vars.size());
        long deg = 0;
        for (size_t k = 0; k < pr.free_vars.size(); ++k) {
            p[k] = g[pr.free_vars[k]];
            deg += p[k];
        }
        if (deg == 0) {
            pr.contains_one = true;
            return pr;
        }
        raw.push_back(std::move(p));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const auto& g : raw) {
        bool min = true;
        for (const auto& h : raw)
            if (h != g && divides(h, g)) { min = false; break; }
        if (min) pr.gens.push_back(g);
    }
    return pr;
}

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& M) {
    int n = M.nvars();
    std::vector<StandardPair> out;
    // iterate subsets sigma in a deterministic (lexicographic-by-membership) order
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> sigma;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) sigma.insert(v);
        Projection pr = project(M, sigma);
        if (pr.contains_one) continue;
        int k = int(pr.free_vars.size());
        if (k == 0) {
            // proper ideal with empty projection only when M has no generators
            if (M.is_zero_ideal()) out.push_back({Exponent(n, 0), sigma});
            continue;
        }
        if (pr.gens.empty()) continue;  // condition 3 unsatisfiable, except k == 0 above
        // degree box: eta_l < max generator degree in variable l
        Exponent box(k, 0);
        for (const auto& g : pr.gens)
            for (int l = 0; l < k; ++l) box[l] = std::max(box[l], g[l]);
        bool empty = false;
        for (int l = 0; l < k; ++l)
            if (box[l] == 0) { empty = true; break; }
        if (empty) continue;
        Exponent eta(k, 0);
        std::vector<StandardPair> local;
        while (true) {
            // condition 2: no projected generator divides eta
            bool standard = true;
            for (const auto& g : pr.gens)
                if (divides(g, eta)) { standard = false; break; }
            if (standard) {
                // condition 3: for each free variable l there is a generator g
                // with g_i <= eta_i for all free i != l
                bool cond3 = true;
                for (int l = 0; l < k && cond3; ++l) {
                    bool found = false;
                    for (const auto& g : pr.gens) {
                        bool ok = true;
                        for (int i = 0; i < k; ++i) {
                            if (i == l) continue;
                            if (g[i] > eta[i]) { ok = false; break; }
                        }
                        if (ok) { found = true; break; }
                    }
                    cond3 = found;
                }
                if (cond3) {
                    Exponent full(n, 0);
                    for (int l = 0; l < k; ++l) full[pr.free_vars[l]] = eta[l];
                    local.push_back({full, sigma});
                }
            }
            // advance odometer
            int pos = k - 1;
            while (pos >= 0) {
                if (++eta[pos] < box[pos]) break;
                eta[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end(), [](const StandardPair& a, const StandardPair& b) {
        std::vector<int> sa(a.sigma.begin(), a.sigma.end()), sb(b.sigma.begin(), b.sigma.end());
        if (sa != sb) return sa < sb;
        return a.eta < b.eta;
    });
    return out;
}

std::vector<StandardPair> top_pairs(const MonomialIdeal& M, int codim) {
    std::vector<StandardPair> out;
    for (auto& p : standard_pairs(M))
        if (int(p.sigma.size()) == M.nvars() - codim) out.push_back(p);
    return out;
}

std::vector<StandardPair> admissible_T(const MonomialIdeal& M, const IntMatrix& B) {
    std::vector<StandardPair> out;
    for (auto& p : top_pairs(M, 2)) {
        std::vector<int> comp;
        for (int v = 0; v < M.nvars(); ++v)
            if (!p.sigma.count(v)) comp.push_back(v);
        Int det = B.at(comp[0], 0) * B.at(comp[1], 1) - B.at(comp[0], 1) * B.at(comp[1], 0);
        if (det != 0) out.push_back(p);
    }
    return out;
}

Int dependent_multiplicity(const MonomialIdeal& M, int k, int l) {
    Int count = 0;
    for (auto& p : top_pairs(M, 2)) {
        bool match = !p.sigma.count(k) && !p.sigma.count(l);
        if (match) ++count;
    }
    return count;
}

std::vector<ExponentRoot> exponent_roots(const std::vector<StandardPair>& pairs, const IntMatrix& A,
                                         const RatVec& c) {
    int n = A.cols();
    RatVec rhs(A.rows());
    for (int i = 0; i < A.rows(); ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += Rat(A.at(i, j)) * c[j];
        rhs[i] = s;
    }
    std::vector<ExponentRoot> roots;
    for (const auto& p : pairs) {
        // unknowns: v_i for i not fixed; fixed: v_i = eta_i for i outside sigma
        std::vector<int> unknown(p.sigma.begin(), p.sigma.end());
        IntMatrix Asub(A.rows(), int(unknown.size()));
        RatVec b = rhs;
        for (int i = 0; i < A.rows(); ++i)
            for (size_t k = 0; k < unknown.size(); ++k) Asub.at(i, int(k)) = A.at(i, unknown[k]);
        for (int j = 0; j < n; ++j) {
            if (p.sigma.count(j)) continue;
            for (int i = 0; i < A.rows(); ++i) b[i] -= Rat(A.at(i, j)) * Rat(p.eta[j]);
        }
        if (int(unknown.size()) != A.rows())
            throw std::invalid_argument("exponent_roots: pair is not top dimensional");
        auto x = solve_rational(Asub, b);
        if (!x) throw GenericityFailure("exponent_roots: unsolvable system (dependent complement rows)");
        // uniqueness requires the complementary square block to be nonsingular
        if (Asub.rank() != Asub.cols())
            throw GenericityFailure("exponent_roots: singular complement block");
        RatVec v(n);
        for (int j = 0; j < n; ++j)
            if (!p.sigma.count(j)) v[j] = Rat(p.eta[j]);
        for (size_t k = 0; k < unknown.size(); ++k) v[unknown[k]] = (*x)[k];
        roots.push_back({std::move(v), p});
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].v == roots[j].v) throw GenericityFailure("exponent_roots: coinciding roots");
    return roots;
}

}  // namespace hornrank
