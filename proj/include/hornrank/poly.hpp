#pragma once

#include <map>
#include <string>
#include <vector>

#include "hornrank/rational.hpp"

namespace hornrank {

// componentwise-nonnegative exponent vector
using Exponent = std::vector<int>;

inline bool divides(const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponent exp_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline long total_degree(const Exponent& a) {
    long d = 0;
    for (int x : a) d += x;
    return d;
}

// Weight-then-grevlex term order. Extra leading weight rows realize block
// (elimination) orders; the final tiebreak is graded reverse lexicographic.
class MonomialOrder {
public:
    explicit MonomialOrder(std::vector<std::vector<long long>> weight_rows = {})
        : weights_(std::move(weight_rows)) {}

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder weighted(std::vector<long long> w) { return MonomialOrder{{std::move(w)}}; }
    // block order eliminating the last `tail` variables (they become heaviest)
    static MonomialOrder eliminate_last(int nvars, int tail, std::vector<long long> w = {});

    // true iff a < b
    bool less(const Exponent& a, const Exponent& b) const;

    const std::vector<std::vector<long long>>& weight_rows() const { return weights_; }

private:
    std::vector<std::vector<long long>> weights_;
};

// Multivariate polynomial with exact rational coefficients; canonical
// (no zero coefficients stored). Keyed by exponent in a fixed container
// order; term orders are applied on demand.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial monomial(const Exponent& e, const Rat& c = 1);
    // binomial x^a - x^b
    static SparsePolynomial difference(const Exponent& a, const Exponent& b);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rat>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rat& c);
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial times_monomial(const Exponent& e, const Rat& c) const;
    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

    // leading term under the order
    const std::pair<const Exponent, Rat>& leading_term(const MonomialOrder& ord) const;

    // scale so the leading coefficient is 1
    void make_monic(const MonomialOrder& ord);

    std::string str(const std::vector<std::string>& var_names) const;

private:
    int nvars_ = 0;
    std::map<Exponent, Rat> terms_;
};

}  // namespace hornrank
