#include "hornrank/shift_algebra.hpp"

#include <sstream>

namespace hornrank {

namespace {

Rat binom(long n, long k) {
    Rat r = 1;
    for (long j = 0; j < k; ++j) r = r * Rat(n - j) / Rat(j + 1);
    return r;
}

}  // namespace

ThetaPoly::ThetaPoly(const Rat& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

ThetaPoly ThetaPoly::theta(int k) {
    ThetaPoly p;
    p.terms_[{k == 0 ? 1 : 0, k == 1 ? 1 : 0}] = 1;
    return p;
}

ThetaPoly ThetaPoly::linear(const Rat& c1, const Rat& c2, const Rat& c0) {
    ThetaPoly p;
    if (c1 != 0) p.terms_[{1, 0}] = c1;
    if (c2 != 0) p.terms_[{0, 1}] = c2;
    if (c0 != 0) p.terms_[{0, 0}] = c0;
    return p;
}

void ThetaPoly::add_term(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
    ThetaPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
    ThetaPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
    ThetaPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

ThetaPoly ThetaPoly::operator-() const {
    ThetaPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ThetaPoly ThetaPoly::shifted(long a1, long a2) const {
    ThetaPoly r;
    for (const auto& [e, c] : terms_) {
        // (theta1 + a1)^i (theta2 + a2)^j
        for (int p = 0; p <= e.first; ++p)
            for (int q = 0; q <= e.second; ++q) {
                Rat coef = c * binom(e.first, e.first - p) * binom(e.second, e.second - q);
                Rat s1 = 1, s2 = 1;
                for (int k = 0; k < e.first - p; ++k) s1 *= Rat(a1);
                for (int k = 0; k < e.second - q; ++k) s2 *= Rat(a2);
                r.add_term(p, q, coef * s1 * s2);
            }
    }
    return r;
}

ThetaPoly ThetaPoly::scaled_arguments(const Rat& inv1, const Rat& inv2) const {
    ThetaPoly r;
    for (const auto& [e, c] : terms_) {
        Rat f = c;
        for (int k = 0; k < e.first; ++k) f *= inv1;
        for (int k = 0; k < e.second; ++k) f *= inv2;
        r.add_term(e.first, e.second, f);
    }
    return r;
}

Rat ThetaPoly::eval(const Rat& t1, const Rat& t2) const {
    Rat r = 0;
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int k = 0; k < e.first; ++k) v *= t1;
        for (int k = 0; k < e.second; ++k) v *= t2;
        r += v;
    }
    return r;
}

long ThetaPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, long(e.first + e.second));
    return d;
}

std::string ThetaPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c0] = *it;
        Rat c = c0;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        bool has_var = e.first + e.second > 0;
        if (c != 1 || !has_var) os << rat_str(c);
        bool star = c != 1 || !has_var;
        if (e.first) {
            os << (star ? "*" : "") << "th1";
            if (e.first > 1) os << "^" << e.first;
            star = true;
        }
        if (e.second) {
            os << (star ? "*" : "") << "th2";
            if (e.second > 1) os << "^" << e.second;
        }
        first = false;
    }
    return os.str();
}

ThetaPoly e_shift(const ThetaPoly& p, int axis, long k) {
    return axis == 0 ? p.shifted(k, 0) : p.shifted(0, k);
}

ShiftElement::ShiftElement(const ThetaPoly& p) {
    if (!p.is_zero()) comps_[{0, 0}] = p;
}

ShiftElement ShiftElement::monomial(long a1, long a2, const ThetaPoly& p) {
    ShiftElement e;
    if (!p.is_zero()) e.comps_[{a1, a2}] = p;
    return e;
}

void ShiftElement::add_component(long a1, long a2, const ThetaPoly& p) {
    if (p.is_zero()) return;
    auto key = std::make_pair(a1, a2);
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(key, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

ShiftElement ShiftElement::operator+(const ShiftElement& o) const {
    ShiftElement r = *this;
    for (const auto& [a, p] : o.comps_) r.add_component(a.first, a.second, p);
    return r;
}

ShiftElement ShiftElement::operator-(const ShiftElement& o) const {
    ShiftElement r = *this;
    for (const auto& [a, p] : o.comps_) r.add_component(a.first, a.second, -p);
    return r;
}

ShiftElement ShiftElement::operator*(const ShiftElement& o) const {
    // (y^a p)(y^b q) = y^{a+b} p(theta + b) q(theta)
    ShiftElement r;
    for (const auto& [a, p] : comps_)
        for (const auto& [b, q] : o.comps_)
            r.add_component(a.first + b.first, a.second + b.second, p.shifted(b.first, b.second) * q);
    return r;
}

std::string ShiftElement::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, p] : comps_) {
        if (!first) os << " + ";
        if (a.first != 0 || a.second != 0) {
            os << "y1^" << a.first << "*y2^" << a.second << "*";
        }
        os << "(" << p.str() << ")";
        first = false;
    }
    return os.str();
}

HornOperators horn_operators(const HornConfig& cfg) {
    HornOperators ops;
    auto build = [&cfg](int i, bool positive) {
        ThetaPoly prod{Rat(1)};
        for (int j = 0; j < cfg.n(); ++j) {
            const Int& bji = cfg.B().at(j, i);
            if (positive ? bji <= 0 : bji >= 0) continue;
            ThetaPoly base = ThetaPoly::linear(Rat(cfg.B().at(j, 0)), Rat(cfg.B().at(j, 1)), cfg.c()[j]);
            Int k = positive ? bji : -bji;
            for (Int l = 0; l < k; ++l) prod = prod * (base - ThetaPoly(Rat(l)));
        }
        return prod;
    };
    ops.Q1 = build(0, true);
    ops.Q2 = build(1, true);
    ops.P1 = build(0, false);
    ops.P2 = build(1, false);
    ops.H1 = ShiftElement(ops.Q1) - ShiftElement::monomial(1, 0, ops.P1);
    ops.H2 = ShiftElement(ops.Q2) - ShiftElement::monomial(0, 1, ops.P2);
    return ops;
}

bool compatibility_check(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                         const ThetaPoly& Q2) {
    ShiftElement y1P1 = ShiftElement::monomial(1, 0, P1);
    ShiftElement y2P2 = ShiftElement::monomial(0, 1, P2);
    if (!(y1P1 * y2P2 == y2P2 * y1P1)) return false;
    ThetaPoly lhs = e_shift(Q2, 1, 1) * Q1.shifted(1, 1);
    ThetaPoly rhs = e_shift(Q1, 0, 1) * Q2.shifted(1, 1);
    return lhs == rhs;
}

ShiftElement psi_operator(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                          const ThetaPoly& Q2) {
    return ShiftElement::monomial(1, 0, Q2 * P1) - ShiftElement::monomial(0, 1, Q1 * P2);
}

bool determinant_identity_check(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                                const ThetaPoly& Q2, const Rat& alpha, const Rat& beta,
                                const Rat& gamma, const Rat& delta) {
    auto scale = [](const Rat& s, const ThetaPoly& p) { return ThetaPoly(s) * p; };
    ShiftElement f1 = ShiftElement(scale(alpha, e_shift(Q1, 1, -1))) - ShiftElement::monomial(1, 0, scale(beta, P1));
    ShiftElement f2 = ShiftElement(scale(gamma, Q2)) - ShiftElement::monomial(0, 1, scale(delta, P2));
    ShiftElement g1 = ShiftElement(scale(alpha, e_shift(Q2, 0, -1))) - ShiftElement::monomial(0, 1, scale(beta, P2));
    ShiftElement g2 = ShiftElement(scale(gamma, Q1)) - ShiftElement::monomial(1, 0, scale(delta, P1));
    ShiftElement lhs = f1 * f2 - g1 * g2;
    Rat det = alpha * delta - beta * gamma;
    ShiftElement rhs = ShiftElement(ThetaPoly(det)) * psi_operator(P1, P2, Q1, Q2);
    return lhs == rhs;
}

TelescopeResult telescoped_operators(const ThetaPoly& P1hat, const ThetaPoly& P2hat,
                                     const ThetaPoly& Q1hat, const ThetaPoly& Q2hat, long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("telescoped_operators: a, b >= 1 required");
    // lambda_{i s}^k(P) = prod_{j=1..k} (E_i^{-j s} P), mu_{i s}^k(P) = prod_{j=0..k-1} (E_i^{j s} P)
    auto lambda = [](const ThetaPoly& P, int axis, long s, long k) {
        ThetaPoly r{Rat(1)};
        for (long j = 1; j <= k; ++j) r = r * e_shift(P, axis, -j * s);
        return r;
    };
    auto mu = [](const ThetaPoly& P, int axis, long s, long k) {
        ThetaPoly r{Rat(1)};
        for (long j = 0; j < k; ++j) r = r * e_shift(P, axis, j * s);
        return r;
    };

    TelescopeResult res;
    // first operator: exponent a on xi_1, telescope height b
    {
        ShiftElement factor;
        for (long nu = 0; nu < b; ++nu)
            factor = factor + ShiftElement::monomial(nu * a, 0,
                     lambda(Q1hat, 0, a, b - 1 - nu) * mu(P1hat, 0, a, nu));
        ShiftElement base = ShiftElement(Q1hat) - ShiftElement::monomial(a, 0, P1hat);
        ShiftElement lhs = factor * base;
        res.U1 = ShiftElement(Q1hat * lambda(Q1hat, 0, a, b - 1)) -
                 ShiftElement::monomial(a * b, 0, mu(P1hat, 0, a, b));
        res.identity_holds = (lhs == res.U1);
    }
    // second operator: exponent b on xi_2, telescope height a
    {
        ShiftElement factor;
        for (long nu = 0; nu < a; ++nu)
            factor = factor + ShiftElement::monomial(0, nu * b,
                     lambda(Q2hat, 1, b, a - 1 - nu) * mu(P2hat, 1, b, nu));
        ShiftElement base = ShiftElement(Q2hat) - ShiftElement::monomial(0, b, P2hat);
        ShiftElement lhs = factor * base;
        ShiftElement rhs = ShiftElement(Q2hat * lambda(Q2hat, 1, b, a - 1)) -
                           ShiftElement::monomial(0, a * b, mu(P2hat, 1, b, a));
        res.U2 = rhs;
        res.identity_holds = res.identity_holds && (lhs == rhs);
    }
    return res;
}

TelescopeResult telescoped_operators(const HornConfig& cfg, long a, long b) {
    HornOperators ops = horn_operators(cfg);
    Rat ia = Rat(1, a), ib = Rat(1, b);
    return telescoped_operators(ops.P1.scaled_arguments(ia, ib), ops.P2.scaled_arguments(ia, ib),
                                ops.Q1.scaled_arguments(ia, ib), ops.Q2.scaled_arguments(ia, ib), a, b);
}

namespace {

void trim(UniPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

Rat resultant(const UniPoly& f0, const UniPoly& g0) {
    UniPoly f = f0, g = g0;
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) throw std::invalid_argument("resultant: zero polynomial");
    long m = long(f.size()) - 1, n = long(g.size()) - 1;
    if (m == 0 && n == 0) return 1;
    long N = m + n;
    // Sylvester matrix: m shifted rows of g, then n shifted rows of f
    std::vector<RatVec> S(N, RatVec(N, Rat(0)));
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) S[r][r + k] = g[n - k];
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) S[m + r][r + k] = f[m - k];
    // exact Gaussian elimination
    Rat det = 1;
    for (long c = 0; c < N; ++c) {
        long p = -1;
        for (long i = c; i < N; ++i)
            if (S[i][c] != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(S[p], S[c]);
            det = -det;
        }
        det *= S[c][c];
        Rat inv = S[c][c];
        for (long j = c; j < N; ++j) S[c][j] /= inv;
        for (long i = c + 1; i < N; ++i) {
            if (S[i][c] == 0) continue;
            Rat fac = S[i][c];
            for (long j = c; j < N; ++j) S[i][j] -= fac * S[c][j];
        }
    }
    return det;
}

UniPoly content_in_t(const ThetaPoly& p) {
    // rewrite with t = theta1 + theta2, s = theta1: p(s, t - s), collect in s
    std::map<int, UniPoly> by_s;
    for (const auto& [e, c] : p.terms()) {
        int i = e.first, j = e.second;
        // theta1^i theta2^j = s^i (t - s)^j
        for (int k = 0; k <= j; ++k) {
            Rat coef = c * binom(j, k);
            if ((j - k) % 2 == 1) coef = -coef;
            int spow = i + (j - k);
            int tpow = k;
            auto& poly = by_s[spow];
            if (int(poly.size()) <= tpow) poly.resize(tpow + 1, Rat(0));
            poly[tpow] += coef;
        }
    }
    UniPoly g;
    for (auto& [spow, poly] : by_s) {
        trim(poly);
        if (poly.empty()) continue;
        g = g.empty() ? [&poly] {
            UniPoly m = poly;
            Rat lead = m.back();
            for (auto& c : m) c /= lead;
            return m;
        }()
                      : uni_gcd(g, poly);
    }
    if (g.empty()) g = UniPoly{Rat(1)};
    return g;
}

SpecialForm special_form_certificate(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                                     const ThetaPoly& Q2) {
    UniPoly f1 = content_in_t(Q1), f2 = content_in_t(Q2);
    UniPoly g1 = content_in_t(P1), g2 = content_in_t(P2);
    if (f1 != f2 || g1 != g2)
        throw UnsupportedShape("special_form_certificate: operators do not share t-contents");
    SpecialForm sf;
    sf.f = f1;
    sf.g = g1;
    sf.certificate = resultant(sf.f, sf.g);
    return sf;
}

std::string unipoly_str(const UniPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = f.size(); k-- > 0;) {
        if (f[k] == 0) continue;
        Rat c = f[k];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        if (c != 1 || k == 0) os << rat_str(c);
        if (k > 0) {
            if (c != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace hornrank
