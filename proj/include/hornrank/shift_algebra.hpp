#pragma once

#include <map>
#include <string>
#include <vector>

#include "hornrank/horn.hpp"

namespace hornrank {

struct UnsupportedShape : std::runtime_error {
    explicit UnsupportedShape(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial in theta_1, theta_2 with exact rational coefficients.
class ThetaPoly {
public:
    ThetaPoly() = default;
    ThetaPoly(const Rat& c);  // constant

    static ThetaPoly theta(int k);  // theta_1 or theta_2
    // c1*theta_1 + c2*theta_2 + c0
    static ThetaPoly linear(const Rat& c1, const Rat& c2, const Rat& c0);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    void add_term(int i, int j, const Rat& c);

    ThetaPoly operator+(const ThetaPoly& o) const;
    ThetaPoly operator-(const ThetaPoly& o) const;
    ThetaPoly operator*(const ThetaPoly& o) const;
    ThetaPoly operator-() const;
    bool operator==(const ThetaPoly& o) const { return terms_ == o.terms_; }

    // p(theta + a) for an integer shift a
    ThetaPoly shifted(long a1, long a2) const;
    // p(theta_1 / a, theta_2 / b)
    ThetaPoly scaled_arguments(const Rat& inv1, const Rat& inv2) const;
    Rat eval(const Rat& t1, const Rat& t2) const;
    long degree() const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rat> terms_;
};

// E_i^k shift operator on polynomials: (E_1^k p)(theta) = p(theta + k e_1)
ThetaPoly e_shift(const ThetaPoly& p, int axis, long k);

// Element of the y-shift algebra in normal form sum_a y^a p_a(theta),
// a in Z^2, with the single relation p(theta) y^a = y^a p(theta + a).
class ShiftElement {
public:
    ShiftElement() = default;
    ShiftElement(const ThetaPoly& p);  // a = 0 component

    static ShiftElement monomial(long a1, long a2, const ThetaPoly& p);

    bool is_zero() const { return comps_.empty(); }
    const std::map<std::pair<long, long>, ThetaPoly>& components() const { return comps_; }
    void add_component(long a1, long a2, const ThetaPoly& p);

    ShiftElement operator+(const ShiftElement& o) const;
    ShiftElement operator-(const ShiftElement& o) const;
    ShiftElement operator*(const ShiftElement& o) const;
    bool operator==(const ShiftElement& o) const { return comps_ == o.comps_; }

    std::string str() const;

private:
    std::map<std::pair<long, long>, ThetaPoly> comps_;
};

struct HornOperators {
    ThetaPoly P1, P2, Q1, Q2;
    ShiftElement H1, H2;  // H_i = Q_i - y_i P_i
};

HornOperators horn_operators(const HornConfig& cfg);

// the two compatibility identities [y1 P1, y2 P2] = 0 and
// (E2 Q2)(E1E2 Q1) = (E1 Q1)(E1E2 Q2)
bool compatibility_check(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                         const ThetaPoly& Q2);

// Psi = y1 Q2(theta) P1(theta) - y2 Q1(theta) P2(theta)
ShiftElement psi_operator(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                          const ThetaPoly& Q2);

// exact identity: the displayed alpha/beta/gamma/delta combination minus
// det * Psi normalizes to zero
bool determinant_identity_check(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                                const ThetaPoly& Q2, const Rat& alpha, const Rat& beta,
                                const Rat& gamma, const Rat& delta);

struct TelescopeResult {
    ShiftElement U1, U2;  // telescoped Horn-type operators in xi
    bool identity_holds;  // both displayed factorizations verified by expansion
};

// the telescoping identities on the xi-transformed system (exponent a on the
// first operator, b on the second; a, b >= 1)
TelescopeResult telescoped_operators(const ThetaPoly& P1hat, const ThetaPoly& P2hat,
                                     const ThetaPoly& Q1hat, const ThetaPoly& Q2hat, long a, long b);
TelescopeResult telescoped_operators(const HornConfig& cfg, long a, long b);

// univariate polynomial, coefficient of t^k at index k
using UniPoly = std::vector<Rat>;

Rat resultant(const UniPoly& f, const UniPoly& g);

// f/g extraction for the special shape f(t) Qt_i - y_i g(t) Pt_i, t = theta_1+theta_2:
// univariate content of Q_i (resp. P_i) in t over the t-free part.
struct SpecialForm {
    UniPoly f, g;          // monic contents
    Rat certificate;       // resultant R(f, g); nonzero certifies holonomicity
};

// throws UnsupportedShape when the two operators do not share contents
SpecialForm special_form_certificate(const ThetaPoly& P1, const ThetaPoly& P2, const ThetaPoly& Q1,
                                     const ThetaPoly& Q2);

// helpers shared with tests
UniPoly content_in_t(const ThetaPoly& p);
std::string unipoly_str(const UniPoly& f, const std::string& var = "t");

}  // namespace hornrank
