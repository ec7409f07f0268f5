#include "hornrank/poly.hpp"

#include <sstream>

namespace hornrank {

MonomialOrder MonomialOrder::eliminate_last(int nvars, int tail, std::vector<long long> w) {
    std::vector<std::vector<long long>> rows;
    std::vector<long long> elim(nvars, 0);
    for (int i = nvars - tail; i < nvars; ++i) elim[i] = 1;
    rows.push_back(std::move(elim));
    if (!w.empty()) {
        w.resize(nvars, 0);
        rows.push_back(std::move(w));
    }
    return MonomialOrder{std::move(rows)};
}

bool MonomialOrder::less(const Exponent& a, const Exponent& b) const {
    for (const auto& w : weights_) {
        long long wa = 0, wb = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            wa += w[i] * a[i];
            wb += w[i] * b[i];
        }
        if (wa != wb) return wa < wb;
    }
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // grevlex: larger = smaller exponent in the rightmost differing variable
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

SparsePolynomial SparsePolynomial::monomial(const Exponent& e, const Rat& c) {
    SparsePolynomial p(int(e.size()));
    if (c != 0) p.terms_[e] = c;
    return p;
}

SparsePolynomial SparsePolynomial::difference(const Exponent& a, const Exponent& b) {
    SparsePolynomial p(int(a.size()));
    p.add_term(a, 1);
    p.add_term(b, -1);
    return p;
}

void SparsePolynomial::add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
    return r;
}

SparsePolynomial SparsePolynomial::times_monomial(const Exponent& e, const Rat& c) const {
    SparsePolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(exp_add(e1, e), c1 * c);
    return r;
}

const std::pair<const Exponent, Rat>& SparsePolynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return *best;
}

void SparsePolynomial::make_monic(const MonomialOrder& ord) {
    if (terms_.empty()) return;
    Rat lc = leading_term(ord).second;
    for (auto& [e, c] : terms_) c /= lc;
}

std::string SparsePolynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-degree first for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat cc = c;
        if (!first) {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        } else if (cc < 0) {
            os << "-";
            cc = -cc;
        }
        bool has_var = total_degree(e) > 0;
        if (cc != 1 || !has_var) os << rat_str(cc);
        bool star = cc != 1 || !has_var;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (star) os << "*";
            os << var_names[v];
            if (e[v] > 1) os << "^" << e[v];
            star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace hornrank
