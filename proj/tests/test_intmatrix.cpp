#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "hornrank/intmatrix.hpp"

using namespace hornrank;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound = 9) {
    IntMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.at(i, j) = long(rng() % (2 * bound + 1)) - bound;
    return M;
}

// invariant factors by the minor-gcd formula: d_k = gcd(k-minors)/gcd((k-1)-minors)
IntVec invariant_factors_by_minors(const IntMatrix& M) {
    int r = std::min(M.rows(), M.cols());
    std::vector<Int> minor_gcd(r + 1, Int(0));
    minor_gcd[0] = 1;
    for (int k = 1; k <= r; ++k) {
        // all k x k minors
        std::vector<int> ri(k), ci(k);
        for (int i = 0; i < k; ++i) ri[i] = i;
        Int g = 0;
        while (true) {
            for (int i = 0; i < k; ++i) ci[i] = i;
            while (true) {
                IntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = M.at(ri[i], ci[j]);
                g = gcd(g, sub.determinant());
                int p = k - 1;
                while (p >= 0 && ci[p] == M.cols() - k + p) --p;
                if (p < 0) break;
                ++ci[p];
                for (int q = p + 1; q < k; ++q) ci[q] = ci[q - 1] + 1;
            }
            int p = k - 1;
            while (p >= 0 && ri[p] == M.rows() - k + p) --p;
            if (p < 0) break;
            ++ri[p];
            for (int q = p + 1; q < k; ++q) ri[q] = ri[q - 1] + 1;
        }
        minor_gcd[k] = abs(g);
    }
    IntVec d;
    for (int k = 1; k <= r; ++k) {
        if (minor_gcd[k] == 0) break;
        d.push_back(minor_gcd[k] / minor_gcd[k - 1]);
    }
    return d;
}

}  // namespace

TEST_CASE("hermite normal form on simple inputs") {
    auto [H, U] = hermite_normal_form(IntMatrix::identity(2));
    CHECK(H == IntMatrix::identity(2));
    CHECK(U == IntMatrix::identity(2));

    IntMatrix M{{2}, {4}};
    auto hr2 = hermite_normal_form(M);
    CHECK(hr2.H == IntMatrix{{2}, {0}});
    CHECK(hr2.U * M == hr2.H);
}

TEST_CASE("hermite form of the Example 3.2 matrix has unit pivots") {
    IntMatrix B = example32_B();
    auto [H, U] = hermite_normal_form(B);
    CHECK(H.at(0, 0) == 1);
    CHECK(H.at(1, 1) == 1);
    CHECK(H.at(0, 1) == 0);
    for (int i = 2; i < 4; ++i)
        for (int j = 0; j < 2; ++j) CHECK(H.at(i, j) == 0);
    CHECK(U * B == H);
}

TEST_CASE("hermite transform reproduces the input on random matrices") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 60; ++t) {
        int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
        IntMatrix M = random_matrix(rng, rows, cols);
        auto [H, U] = hermite_normal_form(M);
        CHECK(U * M == H);
        CHECK(abs(U.determinant()) == 1);
    }
}

TEST_CASE("smith normal form: divisibility chain and reconstruction") {
    SmithDecomposition s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    IntVec d = s.diagonal();
    CHECK(d[0] == 1);
    CHECK(d[1] == 6);

    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal() == IntVec{1, 1, 1});

    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        int rows = 1 + int(rng() % 4), cols = 1 + int(rng() % 4);
        IntMatrix M = random_matrix(rng, rows, cols);
        SmithDecomposition sd = smith_normal_form(M);
        CHECK(sd.U * M * sd.V == sd.D);
        CHECK(abs(sd.U.determinant()) == 1);
        CHECK(abs(sd.V.determinant()) == 1);
        IntVec diag = sd.diagonal();
        for (size_t k = 0; k + 1 < diag.size(); ++k) {
            if (diag[k] == 0) CHECK(diag[k + 1] == 0);
            if (diag[k] != 0) CHECK(diag[k + 1] % diag[k] == 0);
        }
        // oracle: invariant factors from minor gcds
        IntVec expect = invariant_factors_by_minors(M);
        for (size_t k = 0; k < expect.size(); ++k) CHECK(diag[k] == expect[k]);
    }
}

TEST_CASE("gale dual of the Example 3.2 matrix spans the documented row space") {
    IntMatrix B = example32_B();
    IntMatrix A = gale_dual(B);
    REQUIRE(A.rows() == 2);
    for (int j = 0; j < 4; ++j) CHECK(A.at(0, j) == 1);
    IntMatrix Z = A * B;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(Z.at(i, j) == 0);
    // row-equivalent to [[1,1,1,1],[0,1,2,3]]: both HNFs agree
    IntMatrix ref{{1, 1, 1, 1}, {0, 1, 2, 3}};
    CHECK(hermite_normal_form(A).H == hermite_normal_form(ref).H);
}

TEST_CASE("gale dual rejects bad inputs and handles the 3-row case") {
    CHECK_THROWS_AS(gale_dual(IntMatrix{{1, 1}, {-1, -1}}), std::invalid_argument);
    IntMatrix G3 = g3_B();
    IntMatrix A = gale_dual(G3);
    REQUIRE(A.rows() == 1);
    for (int j = 0; j < 3; ++j) CHECK(A.at(0, j) == 1);
}

TEST_CASE("gale dual properties on random zero-sum matrices") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        IntMatrix B = random_zero_sum_matrix(rng);
        IntMatrix A = gale_dual(B);
        CHECK(A.rows() == B.rows() - 2);
        CHECK(A.rank() == B.rows() - 2);
        IntMatrix Z = A * B;
        for (int i = 0; i < Z.rows(); ++i)
            for (int j = 0; j < Z.cols(); ++j) CHECK(Z.at(i, j) == 0);
        for (int j = 0; j < B.rows(); ++j) CHECK(A.at(0, j) == 1);
    }
}

TEST_CASE("gcd of maximal minors") {
    CHECK(gcd_maximal_minors(twisted_cubic_B()) == 3);
    CHECK(gcd_maximal_minors(IntMatrix{{1, 0}, {0, 1}, {-1, -1}}) == 1);
    CHECK(gcd_maximal_minors(IntMatrix{{4, 5}, {-3, -5}}) == 5);
}

TEST_CASE("lattice quotient orders and coset representatives") {
    {
        IntMatrix B = example32_B();
        LatticeQuotient q = lattice_quotient(B, gale_dual(B));
        CHECK(q.order == 1);
        REQUIRE(q.coset_reps.size() == 1);
        for (const auto& x : q.coset_reps[0]) CHECK(x == 0);
        CHECK(q.invariant_factors.empty());
    }
    {
        IntMatrix B = twisted_cubic_B();
        LatticeQuotient q = lattice_quotient(B, gale_dual(B));
        CHECK(q.order == 3);
        CHECK(q.invariant_factors == IntVec{3});
        REQUIRE(q.coset_reps.size() == 3);
        // reps pairwise non-congruent mod L_B
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = a + 1; b < 3; ++b) {
                IntVec diff(4);
                for (int i = 0; i < 4; ++i) diff[i] = q.coset_reps[a][i] - q.coset_reps[b][i];
                CHECK_FALSE(solve_integer(B, diff).has_value());
            }
    }
    {
        IntMatrix B = g3_B();
        LatticeQuotient q = lattice_quotient(B, gale_dual(B));
        CHECK(q.order == 3);
    }
}

TEST_CASE("quotient order equals minor gcd on random matrices") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        IntMatrix B = random_zero_sum_matrix(rng, 9);
        IntMatrix A = gale_dual(B);
        LatticeQuotient q = lattice_quotient(B, A);
        CHECK(q.order == gcd_maximal_minors(B));
        Int prod = 1;
        for (const auto& f : q.invariant_factors) prod *= f;
        CHECK(prod == q.order);
    }
}

TEST_CASE("integer solve decides lattice membership") {
    IntMatrix B = example32_B();
    // B * (1, 1)^T
    IntVec u{1, -1, -1, 1};
    auto z = solve_integer(B, u);
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 1);
    CHECK((*z)[1] == 1);
    IntVec not_in{1, 0, 0, 0};
    CHECK_FALSE(solve_integer(B, not_in).has_value());
}
