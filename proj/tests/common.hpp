#pragma once

#include <random>

#include "hornrank/horn.hpp"

namespace hr = hornrank;

// regression matrices used throughout the suites
inline hr::IntMatrix example32_B() { return hr::IntMatrix{{1, 0}, {-2, 1}, {1, -2}, {0, 1}}; }
inline hr::IntMatrix example32_Bprime() { return hr::IntMatrix{{1, 2}, {-2, -3}, {1, 0}, {0, 1}}; }
inline hr::IntMatrix g3_B() { return hr::IntMatrix{{2, -1}, {-1, 2}, {-1, -1}}; }
inline hr::IntMatrix f1_B() {
    return hr::IntMatrix{{1, 1}, {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}};
}
inline hr::IntMatrix twisted_cubic_B() { return hr::IntMatrix{{-1, 2}, {0, -3}, {3, 0}, {-2, 1}}; }
inline hr::IntMatrix example61_B() { return hr::IntMatrix{{4, 5}, {-3, -5}}; }

inline hr::HornConfig generic_config(const hr::IntMatrix& B, std::uint64_t seed = 7) {
    hr::ParameterSpec p;
    p.generic = true;
    p.seed = seed;
    return hr::HornConfig(B, p);
}

inline hr::HornConfig explicit_config(const hr::IntMatrix& B, const hr::RatVec& c) {
    hr::ParameterSpec p;
    p.generic = false;
    p.explicit_c = c;
    return hr::HornConfig(B, p);
}

// random rank-2 matrix with zero column sums and entries in [-bound, bound]
inline hr::IntMatrix random_zero_sum_matrix(std::mt19937_64& rng, int bound = 6) {
    while (true) {
        int n = 3 + int(rng() % 4);  // 3..6 rows
        hr::IntMatrix B(n, 2);
        long s0 = 0, s1 = 0;
        for (int i = 0; i + 1 < n; ++i) {
            long a = long(rng() % (2 * bound + 1)) - bound;
            long b = long(rng() % (2 * bound + 1)) - bound;
            B.at(i, 0) = a;
            B.at(i, 1) = b;
            s0 += a;
            s1 += b;
        }
        if (std::abs(s0) > bound || std::abs(s1) > bound) continue;
        B.at(n - 1, 0) = -s0;
        B.at(n - 1, 1) = -s1;
        if (B.rank() != 2) continue;
        return B;
    }
}
