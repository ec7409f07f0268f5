#include "hornrank/puiseux.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hornrank {

namespace {

long to_long(const Int& v) { return v.convert_to<long>(); }

// falling factorial [m]_k for integer m >= 0
Int ff(long m, long k) {
    Int r = 1;
    for (long j = 0; j < k; ++j) r *= Int(m - j);
    return r;
}

struct Move {
    long du, dv;     // a column of the oriented pair matrix (du > 0, dv < 0)
    long up, vm;     // a_+ = (du, 0), a_- = (0, -dv)
};

std::vector<Move> pair_moves(const PairSystem& ps) {
    std::vector<Move> mv;
    for (int k = 0; k < 2; ++k) {
        Move m;
        m.du = to_long(ps.M.at(0, k));
        m.dv = to_long(ps.M.at(1, k));
        m.up = m.du;
        m.vm = -m.dv;
        mv.push_back(m);
    }
    return mv;
}

long box_bound(const PairSystem& ps) {
    long d1 = to_long(ps.M.at(0, 0)), d2 = to_long(ps.M.at(0, 1));
    long maxdeg = 0;
    for (int k = 0; k < 2; ++k)
        maxdeg = std::max(maxdeg, std::max(to_long(ps.M.at(0, k)), -to_long(ps.M.at(1, k))));
    return d1 * d2 + maxdeg;
}

void normalize_primitive(std::map<XPoint, Rat>& terms) {
    if (terms.empty()) return;
    Int l = 1, g = 0;
    for (const auto& [e, c] : terms) l = lcm(l, den(c));
    for (const auto& [e, c] : terms) g = gcd(g, num(c) * (l / den(c)));
    Rat scale = Rat(l, g);
    if (terms.begin()->second * scale < 0) scale = -scale;
    for (auto& [e, c] : terms) c *= scale;
}

void normalize_primitive(std::map<RatVec2, Rat>& terms) {
    if (terms.empty()) return;
    Int l = 1, g = 0;
    for (const auto& [e, c] : terms) l = lcm(l, den(c));
    for (const auto& [e, c] : terms) g = gcd(g, num(c) * (l / den(c)));
    Rat scale = Rat(l, g);
    if (terms.begin()->second * scale < 0) scale = -scale;
    for (auto& [e, c] : terms) c *= scale;
}

}  // namespace

std::vector<PairSystem> admissible_pairs(const HornConfig& cfg) {
    std::vector<PairSystem> out;
    const IntMatrix& B = cfg.B();
    for (int i = 0; i < B.rows(); ++i)
        for (int j = i + 1; j < B.rows(); ++j) {
            IntVec bi = B.row(i), bj = B.row(j);
            if (!opposite_open_quadrants(bi, bj)) continue;
            if (bi[0] * bj[1] - bi[1] * bj[0] == 0) continue;
            PairSystem ps;
            ps.i = i;
            ps.j = j;
            ps.flip[0] = bi[0] < 0;
            ps.flip[1] = bi[1] < 0;
            ps.M = IntMatrix(2, 2);
            for (int k = 0; k < 2; ++k) {
                Int s = ps.flip[k] ? -1 : 1;
                ps.M.at(0, k) = s * bi[k];
                ps.M.at(1, k) = s * bj[k];
            }
            ps.ci = cfg.c()[i];
            ps.cj = cfg.c()[j];
            ps.nu = index_nu(bi, bj);
            out.push_back(std::move(ps));
        }
    return out;
}

std::vector<XPoint> base_rectangle(const PairSystem& ps) {
    Int p = abs(ps.M.at(0, 0) * ps.M.at(1, 1));
    Int q = abs(ps.M.at(0, 1) * ps.M.at(1, 0));
    if (p == q) throw std::invalid_argument("base_rectangle: dependent pair");
    long ulim, vlim;
    if (p > q) {
        ulim = to_long(ps.M.at(0, 1));    // u < b_i2
        vlim = to_long(-ps.M.at(1, 0));   // v < -b_j1
    } else {
        ulim = to_long(ps.M.at(0, 0));    // u < b_i1
        vlim = to_long(-ps.M.at(1, 1));   // v < -b_j2
    }
    std::vector<XPoint> pts;
    for (long u = 0; u < ulim; ++u)
        for (long v = 0; v < vlim; ++v) pts.emplace_back(u, v);
    return pts;
}

std::vector<std::vector<XPoint>> enumerate_supports(const PairSystem& ps) {
    auto moves = pair_moves(ps);
    long bound = box_bound(ps);
    auto rect = base_rectangle(ps);
    std::vector<std::vector<XPoint>> supports;
    std::set<XPoint> seen;
    for (const auto& base : rect) {
        if (seen.count(base)) throw std::logic_error("enumerate_supports: base rectangle points connected");
        std::set<XPoint> comp;
        std::deque<XPoint> work{base};
        comp.insert(base);
        while (!work.empty()) {
            XPoint p = work.front();
            work.pop_front();
            for (const auto& m : moves)
                for (int s : {1, -1}) {
                    XPoint q{p.first + s * m.du, p.second + s * m.dv};
                    if (q.first < 0 || q.second < 0) continue;
                    if (q.first > bound || q.second > bound)
                        throw std::logic_error("enumerate_supports: component left the a-priori box");
                    if (comp.insert(q).second) work.push_back(q);
                }
        }
        // closure is guaranteed by the BFS; supports must not overlap
        for (const auto& p : comp)
            if (!seen.insert(p).second)
                throw std::logic_error("enumerate_supports: overlapping supports");
        supports.emplace_back(comp.begin(), comp.end());
    }
    if (Int(supports.size()) != ps.nu) throw std::logic_error("enumerate_supports: count != nu");
    return supports;
}

std::map<XPoint, Rat> solve_coefficients(const std::vector<XPoint>& support, const PairSystem& ps) {
    auto moves = pair_moves(ps);
    std::set<XPoint> in(support.begin(), support.end());
    std::map<XPoint, Rat> coeff;
    coeff[support.front()] = 1;
    std::deque<XPoint> work{support.front()};
    while (!work.empty()) {
        XPoint p = work.front();
        work.pop_front();
        for (const auto& m : moves)
            for (int s : {1, -1}) {
                XPoint q{p.first + s * m.du, p.second + s * m.dv};
                if (!in.count(q) || coeff.count(q)) continue;
                // constraint with w1 = w2 + a: f_{w1} [w1]_{a+} = f_{w2} [w2]_{a-}
                XPoint w1 = s > 0 ? q : p;
                XPoint w2 = s > 0 ? p : q;
                Int fac1 = ff(w1.first, m.up);
                Int fac2 = ff(w2.second, m.vm);
                if (s > 0) {
                    if (fac1 == 0) continue;  // try another edge
                    coeff[q] = coeff[p] * Rat(fac2, fac1);
                } else {
                    if (fac2 == 0) continue;
                    coeff[q] = coeff[p] * Rat(fac1, fac2);
                }
                work.push_back(q);
            }
    }
    if (coeff.size() != support.size())
        throw GenericityFailure("solve_coefficients: support not reachable through nonzero recurrence edges");
    // exact verification: both lattice operators annihilate the polynomial
    for (const auto& m : moves) {
        std::map<XPoint, Rat> residual;
        for (const auto& [w, f] : coeff) {
            if (w.first >= m.up) {
                XPoint r{w.first - m.up, w.second};
                residual[r] += f * Rat(ff(w.first, m.up));
            }
            if (w.second >= m.vm) {
                XPoint r{w.first, w.second - m.vm};
                residual[r] -= f * Rat(ff(w.second, m.vm));
            }
        }
        for (const auto& [r, val] : residual)
            if (val != 0) throw std::logic_error("solve_coefficients: annihilation failed");
    }
    normalize_primitive(coeff);
    return coeff;
}

std::map<RatVec2, Rat> to_horn_variables(const std::map<XPoint, Rat>& xpoly, const PairSystem& ps) {
    Rat det = Rat(ps.M.at(0, 0) * ps.M.at(1, 1) - ps.M.at(0, 1) * ps.M.at(1, 0));
    std::map<RatVec2, Rat> out;
    for (const auto& [w, f] : xpoly) {
        Rat x = Rat(w.first) - ps.ci;
        Rat y = Rat(w.second) - ps.cj;
        Rat a0 = (Rat(ps.M.at(1, 1)) * x - Rat(ps.M.at(0, 1)) * y) / det;
        Rat a1 = (-Rat(ps.M.at(1, 0)) * x + Rat(ps.M.at(0, 0)) * y) / det;
        RatVec2 alpha{ps.flip[0] ? -a0 : a0, ps.flip[1] ? -a1 : a1};
        out[alpha] = f;
    }
    return out;
}

bool annihilated_by_horn(const HornConfig& cfg, const std::map<RatVec2, Rat>& f) {
    for (int i = 0; i < 2; ++i) {
        std::map<RatVec2, Rat> residual;
        for (const auto& [alpha, a] : f) {
            residual[alpha] += a * cfg.eval_Q(i, alpha.a, alpha.b);
            RatVec2 shifted{alpha.a + (i == 0 ? 1 : 0), alpha.b + (i == 1 ? 1 : 0)};
            residual[shifted] -= a * cfg.eval_P(i, alpha.a, alpha.b);
        }
        for (const auto& [e, val] : residual)
            if (val != 0) return false;
    }
    return true;
}

std::vector<PuiseuxPolynomial> all_puiseux(const HornConfig& cfg) {
    std::vector<PuiseuxPolynomial> out;
    std::set<RatVec2> all_support;
    for (const auto& ps : admissible_pairs(cfg)) {
        auto rect = base_rectangle(ps);
        auto supports = enumerate_supports(ps);
        for (size_t s = 0; s < supports.size(); ++s) {
            const auto& sx = supports[s];
            PuiseuxPolynomial poly;
            poly.pair_i = ps.i;
            poly.pair_j = ps.j;
            poly.base_point = rect[s];
            poly.x_support = sx;
            poly.x_terms = solve_coefficients(sx, ps);

            // y-exponents of the support
            std::map<XPoint, Rat> marker;
            for (const auto& w : sx) marker[w] = 1;
            auto ymap = to_horn_variables(marker, ps);
            std::vector<RatVec2> ysup;
            for (const auto& [e, c] : ymap) ysup.push_back(e);

            // full-system recurrence on the support
            std::map<RatVec2, Rat> coeff;
            std::set<RatVec2> in(ysup.begin(), ysup.end());
            coeff[ysup.front()] = 1;
            std::deque<RatVec2> work{ysup.front()};
            while (!work.empty()) {
                RatVec2 p = work.front();
                work.pop_front();
                for (int k = 0; k < 2; ++k)
                    for (int sg : {1, -1}) {
                        RatVec2 q{p.a + (k == 0 ? sg : 0), p.b + (k == 1 ? sg : 0)};
                        if (!in.count(q) || coeff.count(q)) continue;
                        if (sg > 0) {
                            Rat qq = cfg.eval_Q(k, q.a, q.b);
                            if (qq == 0) continue;
                            coeff[q] = coeff[p] * cfg.eval_P(k, p.a, p.b) / qq;
                        } else {
                            Rat pp = cfg.eval_P(k, q.a, q.b);
                            if (pp == 0) continue;
                            coeff[q] = coeff[p] * cfg.eval_Q(k, p.a, p.b) / pp;
                        }
                        work.push_back(q);
                    }
            }
            if (coeff.size() != ysup.size())
                throw GenericityFailure("all_puiseux: support unreachable through nonzero recurrences");
            if (!annihilated_by_horn(cfg, coeff))
                throw GenericityFailure("all_puiseux: candidate not annihilated (non-generic parameters)");
            for (const auto& [e, c] : coeff) {
                if (c == 0) throw GenericityFailure("all_puiseux: vanishing coefficient on support");
                if (!all_support.insert(e).second)
                    throw GenericityFailure("all_puiseux: overlapping supports across solutions");
            }
            normalize_primitive(coeff);
            poly.terms = std::move(coeff);
            out.push_back(std::move(poly));
        }
    }
    if (Int(out.size()) != puiseux_rank(cfg)) throw std::logic_error("all_puiseux: count != puiseux rank");
    return out;
}

}  // namespace hornrank
