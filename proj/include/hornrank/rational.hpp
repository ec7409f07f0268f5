#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hornrank {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// true iff q is an integer < 0 / >= 0
inline bool is_negative_integer(const Rat& q) { return is_integer(q) && num(q) < 0; }
inline bool is_nonnegative_integer(const Rat& q) { return is_integer(q) && num(q) >= 0; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// "p/q" with q > 0, or "p" when q == 1
inline std::string rat_str(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// falling factorial x(x-1)...(x-k+1), k >= 0
inline Rat falling_factorial(const Rat& x, long k) {
    Rat r = 1;
    for (long j = 0; j < k; ++j) r *= x - j;
    return r;
}

}  // namespace hornrank
