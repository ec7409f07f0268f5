#include "hornrank/groebner.hpp"

#include <algorithm>

#include "hornrank/horn.hpp"

namespace hornrank {

namespace {

// one reduction step of the leading term of f by g (f_lt divisible by g_lt)
void reduce_once(SparsePolynomial& f, const SparsePolynomial& g, const Exponent& f_lt_e,
                 const Rat& f_lt_c, const Exponent& g_lt_e, const Rat& g_lt_c) {
    Exponent q = exp_sub(f_lt_e, g_lt_e);
    f = f - g.times_monomial(q, f_lt_c / g_lt_c);
}

// full multivariate division: returns remainder with no term divisible by any leading term
SparsePolynomial reduce_full(SparsePolynomial f, const std::vector<SparsePolynomial>& basis,
                             const std::vector<std::pair<Exponent, Rat>>& lts, const MonomialOrder& ord) {
    SparsePolynomial rem(f.nvars());
    while (!f.is_zero()) {
        auto [e, c] = f.leading_term(ord);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (divides(lts[i].first, e)) {
                reduce_once(f, basis[i], e, c, lts[i].first, lts[i].second);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(e, c);
            f.add_term(e, -c);
        }
    }
    return rem;
}

std::vector<std::pair<Exponent, Rat>> leading_terms(const std::vector<SparsePolynomial>& basis,
                                                    const MonomialOrder& ord) {
    std::vector<std::pair<Exponent, Rat>> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(g.leading_term(ord));
    return lts;
}

bool coprime(const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<SparsePolynomial>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& opt) {
    std::vector<SparsePolynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");
    for (auto& g : basis) g.make_monic(order);

    struct Pair {
        long sugar;
        Exponent lcm;
        size_t i, j;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](size_t jnew) {
        auto ltn = basis[jnew].leading_term(order).first;
        for (size_t i = 0; i < jnew; ++i) {
            auto lti = basis[i].leading_term(order).first;
            if (coprime(lti, ltn)) continue;  // product criterion
            Pair p;
            p.lcm = exp_lcm(lti, ltn);
            p.sugar = total_degree(p.lcm);
            p.i = i;
            p.j = jnew;
            queue.push_back(std::move(p));
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    std::uint64_t reductions = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        if (++reductions > opt.spair_budget)
            throw ResourceExhausted("buchberger: S-pair budget exceeded (basis size " +
                                    std::to_string(basis.size()) + ")");
        auto [ei, ci] = basis[p.i].leading_term(order);
        auto [ej, cj] = basis[p.j].leading_term(order);
        SparsePolynomial s = basis[p.i].times_monomial(exp_sub(p.lcm, ei), Rat(1) / ci) -
                             basis[p.j].times_monomial(exp_sub(p.lcm, ej), Rat(1) / cj);
        auto lts = leading_terms(basis, order);
        SparsePolynomial r = reduce_full(std::move(s), basis, lts, order);
        if (r.is_zero()) continue;
        r.make_monic(order);
        basis.push_back(std::move(r));
        push_pairs(basis.size() - 1);
    }

    // interreduce: drop redundant leading terms, reduce tails
    std::vector<SparsePolynomial> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto lt = basis[i].leading_term(order).first;
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            auto ltj = basis[j].leading_term(order).first;
            if (divides(ltj, lt) && (ltj != lt || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<SparsePolynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (others.empty()) break;
        auto lts = leading_terms(others, order);
        reduced[i] = reduce_full(reduced[i], others, lts, order);
        if (reduced[i].is_zero()) throw std::logic_error("buchberger: interreduction lost a generator");
        reduced[i].make_monic(order);
    }
    std::sort(reduced.begin(), reduced.end(), [&order](const SparsePolynomial& a, const SparsePolynomial& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return GroebnerBasis{std::move(reduced), order, true};
}

SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& gb) {
    auto lts = leading_terms(gb.generators, gb.order);
    return reduce_full(f, gb.generators, lts, gb.order);
}

std::vector<SparsePolynomial> lattice_basis_generators(const IntMatrix& B) {
    int n = B.rows();
    std::vector<SparsePolynomial> gens;
    for (int c = 0; c < B.cols(); ++c) {
        Exponent up(n, 0), um(n, 0);
        for (int i = 0; i < n; ++i) {
            if (B.at(i, c) > 0) up[i] = int(B.at(i, c));
            if (B.at(i, c) < 0) um[i] = int(-B.at(i, c));
        }
        gens.push_back(SparsePolynomial::difference(up, um));
    }
    return gens;
}

std::vector<SparsePolynomial> saturate_lattice_ideal(const IntMatrix& B, const BuchbergerOptions& opt) {
    int n = B.rows();
    // adjoin t as variable n with t*x_1...x_n - 1, eliminate t
    std::vector<SparsePolynomial> gens;
    for (const auto& g : lattice_basis_generators(B)) {
        SparsePolynomial ge(n + 1);
        for (const auto& [e, c] : g.terms()) {
            Exponent ee = e;
            ee.push_back(0);
            ge.add_term(ee, c);
        }
        gens.push_back(std::move(ge));
    }
    Exponent all(n + 1, 1), one(n + 1, 0);
    gens.push_back(SparsePolynomial::difference(all, one));
    MonomialOrder elim = MonomialOrder::eliminate_last(n + 1, 1);
    GroebnerBasis gb = buchberger(gens, elim, opt);
    std::vector<SparsePolynomial> result;
    for (const auto& g : gb.generators) {
        bool has_t = false;
        for (const auto& [e, c] : g.terms())
            if (e[n] > 0) { has_t = true; break; }
        if (has_t) continue;
        SparsePolynomial gn(n);
        for (const auto& [e, c] : g.terms()) {
            Exponent ee(e.begin(), e.end() - 1);
            gn.add_term(ee, c);
        }
        result.push_back(std::move(gn));
    }
    if (result.empty()) throw std::logic_error("saturate_lattice_ideal: empty elimination");
    return result;
}

InitialIdeal initial_ideal(const std::vector<SparsePolynomial>& gens, const std::vector<long long>& w,
                           const BuchbergerOptions& opt) {
    MonomialOrder ord = MonomialOrder::weighted(w);
    GroebnerBasis gb = buchberger(gens, ord, opt);
    InitialIdeal init;
    init.generic = true;
    std::vector<Exponent> lead;
    for (const auto& g : gb.generators) {
        // w-leading form: all terms of maximal w-weight
        long long best = 0;
        bool first = true;
        std::vector<Exponent> top;
        for (const auto& [e, c] : g.terms()) {
            long long we = 0;
            for (size_t i = 0; i < e.size(); ++i) we += w[i] * e[i];
            if (first || we > best) {
                best = we;
                top.assign(1, e);
                first = false;
            } else if (we == best) {
                top.push_back(e);
            }
        }
        if (top.size() > 1) init.generic = false;
        lead.push_back(top.front());
    }
    // minimalize
    std::sort(lead.begin(), lead.end());
    lead.erase(std::unique(lead.begin(), lead.end()), lead.end());
    for (const auto& e : lead) {
        bool min = true;
        for (const auto& f : lead)
            if (f != e && divides(f, e)) { min = false; break; }
        if (min) init.generators.push_back(e);
    }
    return init;
}

bool membership_alpha(const IntMatrix& B, const BuchbergerOptions& opt) {
    IntVec alpha = alpha_vector(B);
    Exponent ae(B.rows(), 0);
    for (int i = 0; i < B.rows(); ++i) ae[i] = int(alpha[i]);
    auto latt = saturate_lattice_ideal(B, opt);
    GroebnerBasis gbI = buchberger(lattice_basis_generators(B), MonomialOrder::grevlex(), opt);
    for (const auto& f : latt) {
        SparsePolynomial shifted = f.times_monomial(ae, 1);
        if (!normal_form(shifted, gbI).is_zero()) return false;
    }
    return true;
}

}  // namespace hornrank
