#include "hornrank/intmatrix.hpp"

#include <algorithm>

namespace hornrank {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    e_.resize(size_t(rows_) * cols_);
    int i = 0;
    for (const auto& r : init) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
        int j = 0;
        for (long long v : r) at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntVec IntMatrix::row(int i) const {
    IntVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::col(int j) const {
    IntVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
    return T;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMatrix R(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) R.at(i, j) += at(i, k) * o.at(k, j);
        }
    return R;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix R = *this;
    for (auto& x : R.e_) x = -x;
    return R;
}

void IntMatrix::swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::add_row_multiple(int i, int j, const Int& k) {
    for (int c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

int IntMatrix::rank() const {
    // fraction-free Gaussian elimination on a copy
    IntMatrix M = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (M.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        M.swap_rows(r, p);
        for (int i = r + 1; i < rows_; ++i) {
            if (M.at(i, c) == 0) continue;
            Int a = M.at(r, c), b = M.at(i, c);
            for (int j = c; j < cols_; ++j) M.at(i, j) = M.at(i, j) * a - M.at(r, j) * b;
        }
        ++r;
    }
    return r;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free algorithm
    IntMatrix M = *this;
    Int prev = 1;
    Int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

HermiteResult hermite_normal_form(const IntMatrix& M) {
    int m = M.rows(), n = M.cols();
    IntMatrix H = M, U = IntMatrix::identity(m);
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // gcd-reduce column c below row r using Euclidean row steps
        while (true) {
            int p = -1;
            for (int i = r; i < m; ++i)
                if (H.at(i, c) != 0 && (p < 0 || abs(H.at(i, c)) < abs(H.at(p, c)))) p = i;
            if (p < 0) break;
            if (p != r) { H.swap_rows(r, p); U.swap_rows(r, p); }
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q = H.at(i, c) / H.at(r, c);
                H.add_row_multiple(i, r, -q);
                U.add_row_multiple(i, r, -q);
                if (H.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0) { H.negate_row(r); U.negate_row(r); }
        for (int i = 0; i < r; ++i) {
            // reduce entries above the pivot into [0, pivot)
            Int q = H.at(i, c) / H.at(r, c);
            if (H.at(i, c) - q * H.at(r, c) < 0) q -= 1;
            if (q != 0) { H.add_row_multiple(i, r, -q); U.add_row_multiple(i, r, -q); }
        }
        ++r;
    }
    return {H, U};
}

namespace {

// divisibility fix-up: arrange d1 | d2 for adjacent diagonal entries
void smith_reduce(IntMatrix& D, IntMatrix& U, IntMatrix& V);

void clear_row_col(IntMatrix& D, IntMatrix& U, IntMatrix& V, int k) {
    int m = D.rows(), n = D.cols();
    while (true) {
        // move a nonzero entry of minimal absolute value into (k,k)
        int pi = -1, pj = -1;
        for (int i = k; i < m; ++i)
            for (int j = k; j < n; ++j)
                if (D.at(i, j) != 0 && (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) return;
        if (pi != k) { D.swap_rows(k, pi); U.swap_rows(k, pi); }
        if (pj != k) {
            for (int i = 0; i < m; ++i) std::swap(D.at(i, k), D.at(i, pj));
            for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, k), V.at(i, pj));
        }
        bool clean = true;
        for (int i = k + 1; i < m; ++i) {
            if (D.at(i, k) == 0) continue;
            Int q = D.at(i, k) / D.at(k, k);
            D.add_row_multiple(i, k, -q);
            U.add_row_multiple(i, k, -q);
            if (D.at(i, k) != 0) clean = false;
        }
        for (int j = k + 1; j < n; ++j) {
            if (D.at(k, j) == 0) continue;
            Int q = D.at(k, j) / D.at(k, k);
            for (int i = 0; i < m; ++i) D.at(i, j) -= q * D.at(i, k);
            for (int i = 0; i < V.rows(); ++i) V.at(i, j) -= q * V.at(i, k);
            if (D.at(k, j) != 0) clean = false;
        }
        if (clean) return;
    }
}

void smith_reduce(IntMatrix& D, IntMatrix& U, IntMatrix& V) {
    int m = D.rows(), n = D.cols();
    int t = std::min(m, n);
    for (int k = 0; k < t; ++k) clear_row_col(D, U, V, k);
    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k + 1 < t; ++k) {
            Int a = D.at(k, k), b = D.at(k + 1, k + 1);
            if (a == 0 || b == 0 || b % a == 0) continue;
            // add column k+1 to column k, then re-clear the 2x2 block
            for (int i = 0; i < m; ++i) D.at(i, k) += D.at(i, k + 1);
            for (int i = 0; i < V.rows(); ++i) V.at(i, k) += V.at(i, k + 1);
            clear_row_col(D, U, V, k);
            clear_row_col(D, U, V, k + 1);
            changed = true;
        }
    }
    for (int k = 0; k < t; ++k)
        if (D.at(k, k) < 0) {
            for (int i = 0; i < V.rows(); ++i) V.at(i, k) = -V.at(i, k);
            D.at(k, k) = -D.at(k, k);
        }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
    IntMatrix D = M, U = IntMatrix::identity(M.rows()), V = IntMatrix::identity(M.cols());
    smith_reduce(D, U, V);
    return {U, D, V};
}

IntVec SmithDecomposition::diagonal() const {
    int t = std::min(D.rows(), D.cols());
    IntVec d(t);
    for (int k = 0; k < t; ++k) d[k] = D.at(k, k);
    return d;
}

IntMatrix kernel_basis(const IntMatrix& M) {
    // rows of U paired with zero rows of H = U*M^T form the kernel of M
    auto [H, U] = hermite_normal_form(M.transpose());
    std::vector<int> zero_rows;
    for (int i = 0; i < H.rows(); ++i) {
        bool z = true;
        for (int j = 0; j < H.cols(); ++j)
            if (H.at(i, j) != 0) { z = false; break; }
        if (z) zero_rows.push_back(i);
    }
    IntMatrix K(M.cols(), int(zero_rows.size()));
    for (size_t k = 0; k < zero_rows.size(); ++k)
        for (int j = 0; j < M.cols(); ++j) K.at(j, int(k)) = U.at(zero_rows[k], j);
    return K;
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
    auto [H, U] = hermite_normal_form(M);
    if (!(H == IntMatrix::identity(M.rows()))) throw std::invalid_argument("matrix not unimodular");
    return U;
}

std::optional<RatVec> solve_rational(const IntMatrix& M, const RatVec& b) {
    int m = M.rows(), n = M.cols();
    std::vector<RatVec> A(m, RatVec(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) A[i][j] = Rat(M.at(i, j));
        A[i][n] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (A[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        Rat inv = A[r][c];
        for (int j = c; j <= n; ++j) A[r][j] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (int j = c; j <= n; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (A[i][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = A[i][n];
    return x;
}

std::optional<IntVec> solve_integer(const IntMatrix& M, const IntVec& b) {
    // column Hermite form: M * U^T = H^T with H = row-HNF(M^T); H^T is column
    // echelon, so forward substitution decides lattice membership of b exactly.
    auto [H, U] = hermite_normal_form(M.transpose());
    IntVec rem = b;
    int k = H.rows();
    IntVec y(k, Int(0));
    for (int i = 0; i < k; ++i) {
        int pr = -1;
        for (int j = 0; j < H.cols(); ++j)
            if (H.at(i, j) != 0) { pr = j; break; }
        if (pr < 0) break;  // zero column of H^T
        if (rem[pr] % H.at(i, pr) != 0) return std::nullopt;
        y[i] = rem[pr] / H.at(i, pr);
        for (int j = 0; j < H.cols(); ++j) rem[j] -= y[i] * H.at(i, j);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    // x = U^T * y
    IntVec x(M.cols(), Int(0));
    for (int i = 0; i < M.cols(); ++i)
        for (int j = 0; j < k; ++j) x[i] += U.at(j, i) * y[j];
    IntVec check = M * x;
    for (size_t i = 0; i < b.size(); ++i)
        if (check[i] != b[i]) return std::nullopt;
    return x;
}

IntMatrix gale_dual(const IntMatrix& B) {
    int n = B.rows();
    if (B.cols() != 2) throw std::invalid_argument("gale_dual: B must be n x 2");
    if (n <= 2) throw std::invalid_argument("gale_dual: n > 2 required");
    if (B.rank() != 2) throw std::invalid_argument("gale_dual: rank 2 required");
    for (int j = 0; j < 2; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += B.at(i, j);
        if (s != 0) throw std::invalid_argument("gale_dual: column sums must vanish");
    }
    // saturated left kernel: kernel of B^T, rows as basis
    IntMatrix K = kernel_basis(B.transpose()).transpose();  // (n-2) x n
    // coefficients of the all-ones vector in the K-row basis
    RatVec ones(n, Rat(1));
    auto xq = solve_rational(K.transpose(), ones);
    if (!xq) throw std::logic_error("gale_dual: ones vector not in kernel");
    int k = n - 2;
    IntVec x(k);
    for (int i = 0; i < k; ++i) {
        if (!is_integer((*xq)[i])) throw std::logic_error("gale_dual: non-integral coordinates");
        x[i] = num((*xq)[i]);
    }
    // complete the primitive row x to a unimodular matrix with x as first row:
    // row-HNF of the column vector x gives U*x = (1,0,...,0)^T, so x = e_1^T * U^{-T};
    // the matrix with first row x is (U^T)^{-1}.
    IntMatrix xc(k, 1);
    for (int i = 0; i < k; ++i) xc.at(i, 0) = x[i];
    auto [H, U] = hermite_normal_form(xc);
    if (H.at(0, 0) != 1) throw std::logic_error("gale_dual: ones vector not primitive");
    IntMatrix Vinv = unimodular_inverse(U.transpose());
    IntMatrix A = Vinv * K;
    // first row should now be all ones
    for (int j = 0; j < n; ++j)
        if (A.at(0, j) != 1) throw std::logic_error("gale_dual: normalization failed");
    return A;
}

Int gcd_maximal_minors(const IntMatrix& B) {
    if (B.cols() != 2 || B.rank() != 2) throw std::invalid_argument("gcd_maximal_minors: rank-2 n x 2 required");
    Int g = 0;
    for (int i = 0; i < B.rows(); ++i)
        for (int j = i + 1; j < B.rows(); ++j) {
            Int m = B.at(i, 0) * B.at(j, 1) - B.at(i, 1) * B.at(j, 0);
            g = gcd(g, m);
        }
    return abs(g);
}

LatticeQuotient lattice_quotient(const IntMatrix& B, const IntMatrix& A) {
    int n = B.rows();
    {
        IntMatrix prod = A * B;
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                if (prod.at(i, j) != 0) throw std::invalid_argument("lattice_quotient: A*B != 0");
    }
    IntMatrix K = kernel_basis(A);  // n x 2, basis of L
    if (K.cols() != 2) throw std::invalid_argument("lattice_quotient: kernel rank != 2");
    // express columns of B in the K basis: K*S = B
    IntMatrix S(2, 2);
    for (int c = 0; c < 2; ++c) {
        RatVec b(n);
        for (int i = 0; i < n; ++i) b[i] = Rat(B.at(i, c));
        auto s = solve_rational(K, b);
        if (!s) throw std::invalid_argument("lattice_quotient: B not inside ker A");
        for (int i = 0; i < 2; ++i) {
            if (!is_integer((*s)[i])) throw std::invalid_argument("lattice_quotient: B not inside ker A over Z");
            S.at(i, c) = num((*s)[i]);
        }
    }
    SmithDecomposition sd = smith_normal_form(S);
    IntVec d = sd.diagonal();
    Int g = abs(d[0] * d[1]);
    if (g == 0) throw std::invalid_argument("lattice_quotient: B rank deficient");
    LatticeQuotient q;
    q.order = g;
    for (const auto& f : d)
        if (f != 1) q.invariant_factors.push_back(f);
    // coset representatives: z = U^{-1} (r1, r2), 0 <= ri < di, mapped by K
    IntMatrix Uinv = unimodular_inverse(sd.U);
    for (Int r1 = 0; r1 < d[0]; ++r1)
        for (Int r2 = 0; r2 < d[1]; ++r2) {
            IntVec z{Uinv.at(0, 0) * r1 + Uinv.at(0, 1) * r2, Uinv.at(1, 0) * r1 + Uinv.at(1, 1) * r2};
            q.coset_reps.push_back(K * z);
        }
    return q;
}

}  // namespace hornrank
