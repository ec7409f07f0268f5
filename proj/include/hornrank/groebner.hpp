#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hornrank/intmatrix.hpp"
#include "hornrank/poly.hpp"

namespace hornrank {

struct ResourceExhausted : std::runtime_error {
    explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct GroebnerBasis {
    std::vector<SparsePolynomial> generators;  // reduced, monic, sorted
    MonomialOrder order;
    bool reduced = true;
};

struct BuchbergerOptions {
    std::uint64_t spair_budget = 1000000;
};

// Reduced Groebner basis by Buchberger's algorithm (normal strategy with
// sugar-style ordering of pairs, product criterion).
GroebnerBasis buchberger(const std::vector<SparsePolynomial>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& opt = {});

// Full normal form: no term of the result is divisible by any leading term.
SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& gb);

// Generators of the lattice ideal I_B = (I : (x_1...x_n)^inf) where I is the
// lattice basis ideal of the columns of B, via the auxiliary-variable trick.
std::vector<SparsePolynomial> saturate_lattice_ideal(const IntMatrix& B,
                                                     const BuchbergerOptions& opt = {});

// lattice basis ideal generators T_i from the columns of B
std::vector<SparsePolynomial> lattice_basis_generators(const IntMatrix& B);

struct InitialIdeal {
    std::vector<Exponent> generators;  // minimal monomial generators
    bool generic;                      // every GB element had a unique w-maximal term
};

// Initial ideal with respect to a weight vector (computed from the reduced GB
// under w-then-grevlex; generic == false means w must be resampled).
InitialIdeal initial_ideal(const std::vector<SparsePolynomial>& gens, const std::vector<long long>& w,
                           const BuchbergerOptions& opt = {});

// Proposition 4.3 check: partial^alpha * I_B is contained in I
bool membership_alpha(const IntMatrix& B, const BuchbergerOptions& opt = {});

}  // namespace hornrank
