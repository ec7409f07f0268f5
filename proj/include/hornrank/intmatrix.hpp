#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hornrank/rational.hpp"

namespace hornrank {

// Dense matrix of arbitrary-precision integers. Everything exact.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    IntVec row(int i) const;
    IntVec col(int j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntVec operator*(const IntVec& v) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    int rank() const;
    Int determinant() const;  // square only

    void swap_rows(int i, int j);
    void negate_row(int i);
    // row i += k * row j
    void add_row_multiple(int i, int j, const Int& k);

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HermiteResult {
    IntMatrix H;  // row-echelon Hermite form
    IntMatrix U;  // unimodular, U*M = H
};

struct SmithDecomposition {
    IntMatrix U, D, V;  // U*M*V = D, D diagonal with d1 | d2 | ...
    IntVec diagonal() const;
};

// U*M = H with H in row Hermite form: echelon, positive pivots,
// entries above each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& M);

SmithDecomposition smith_normal_form(const IntMatrix& M);

// Basis of the integer kernel {x : M*x = 0}, returned as columns of an
// n x k matrix (n = M.cols()). The basis spans the saturated kernel lattice.
IntMatrix kernel_basis(const IntMatrix& M);

// Unimodular inverse (throws unless |det| = 1).
IntMatrix unimodular_inverse(const IntMatrix& M);

// Solve M*x = b over the rationals (least structure: any consistent solution,
// unique when M has full column rank). nullopt when inconsistent.
std::optional<RatVec> solve_rational(const IntMatrix& M, const RatVec& b);

// Solve M*x = b over the integers; nullopt when no integral solution exists.
std::optional<IntVec> solve_integer(const IntMatrix& M, const IntVec& b);

// Gale dual of an n x 2 integer matrix of rank 2 with zero column sums and
// n > 2: an (n-2) x n matrix A with A*B = 0, rows a lattice basis of the
// saturated left kernel, first row (1,...,1).
IntMatrix gale_dual(const IntMatrix& B);

// Positive gcd of all 2x2 minors of an n x 2 matrix of rank 2.
Int gcd_maximal_minors(const IntMatrix& B);

struct LatticeQuotient {
    Int order;                        // = g
    IntVec invariant_factors;         // nontrivial factors (1s dropped); product = g
    std::vector<IntVec> coset_reps;   // representatives u_l in L = ker_Z(A); count = g
};

// Structure of L/L_B where L = ker_Z(A) and L_B is spanned by B's columns.
LatticeQuotient lattice_quotient(const IntMatrix& B, const IntMatrix& A);

}  // namespace hornrank
