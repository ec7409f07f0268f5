#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "common.hpp"
#include "hornrank/puiseux.hpp"

using namespace hornrank;

namespace {

Rat R(long p, long q = 1) { return Rat(p, q); }

std::map<RatVec2, Rat> yterms(std::initializer_list<std::pair<RatVec2, Rat>> init) {
    std::map<RatVec2, Rat> m;
    for (const auto& [e, c] : init) m[e] = c;
    return m;
}

bool same_up_to_scalar(const std::map<RatVec2, Rat>& a, const std::map<RatVec2, Rat>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto ia = a.begin();
    auto ib = b.begin();
    if (!(ia->first == ib->first)) return false;
    Rat s = ia->second / ib->second;
    for (; ia != a.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (ia->second != s * ib->second) return false;
    }
    return true;
}

bool same_x_up_to_scalar(const std::map<XPoint, Rat>& a, std::initializer_list<std::pair<XPoint, Rat>> bl) {
    std::map<XPoint, Rat> b;
    for (const auto& [e, c] : bl) b[e] = c;
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    auto ib = b.begin();
    Rat s = ia->second / ib->second;
    for (; ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != s * ib->second) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("admissible pairs") {
    CHECK(admissible_pairs(generic_config(g3_B())).size() == 1);
    CHECK(admissible_pairs(generic_config(f1_B())).empty());
    auto ps = admissible_pairs(generic_config(example32_B()));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].i == 1);
    CHECK(ps[0].j == 2);
    CHECK(ps[0].nu == 1);
    // orientation: first row strictly positive, second strictly negative
    CHECK(ps[0].M.at(0, 0) > 0);
    CHECK(ps[0].M.at(0, 1) > 0);
    CHECK(ps[0].M.at(1, 0) < 0);
    CHECK(ps[0].M.at(1, 1) < 0);
}

TEST_CASE("base rectangle sizes") {
    HornConfig e61 = explicit_config(example61_B(), {R(0), R(0)});
    auto ps = admissible_pairs(e61);
    REQUIRE(ps.size() == 1);
    CHECK(base_rectangle(ps[0]).size() == 15);

    auto ps32 = admissible_pairs(generic_config(example32_B()));
    CHECK(base_rectangle(ps32[0]).size() == 1);

    PairSystem dep;
    dep.M = IntMatrix{{1, 1}, {-1, -1}};
    dep.nu = 0;
    CHECK_THROWS_AS(base_rectangle(dep), std::invalid_argument);
}

TEST_CASE("Example 6.1 supports: 12 singletons and the three multi-point components") {
    HornConfig e61 = explicit_config(example61_B(), {R(0), R(0)});
    auto ps = admissible_pairs(e61);
    REQUIRE(ps.size() == 1);
    auto supports = enumerate_supports(ps[0]);
    REQUIRE(supports.size() == 15);
    long singletons = 0;
    std::vector<std::vector<XPoint>> multi;
    for (const auto& s : supports) {
        if (s.size() == 1)
            ++singletons;
        else
            multi.push_back(s);
    }
    CHECK(singletons == 12);
    REQUIRE(multi.size() == 3);
    std::sort(multi.begin(), multi.end());
    CHECK(multi[0] == std::vector<XPoint>{{0, 3}, {4, 0}});
    CHECK(multi[1] == std::vector<XPoint>{{0, 4}, {4, 1}});
    CHECK(multi[2] == std::vector<XPoint>{{0, 5}, {1, 3}, {4, 2}, {5, 0}});
}

TEST_CASE("Example 6.1 coefficients match the paper's polynomial list") {
    HornConfig e61 = explicit_config(example61_B(), {R(0), R(0)});
    auto ps = admissible_pairs(e61);
    auto supports = enumerate_supports(ps[0]);
    for (const auto& s : supports) {
        auto sol = solve_coefficients(s, ps[0]);
        if (s.size() == 1) {
            CHECK(sol.begin()->second == 1);
        } else if (s.size() == 2 && s.front() == XPoint{0, 3}) {
            CHECK(same_x_up_to_scalar(sol, {{{0, 3}, R(4)}, {{4, 0}, R(1)}}));  // x1^4 + 4 x2^3
        } else if (s.size() == 2) {
            CHECK(same_x_up_to_scalar(sol, {{{0, 4}, R(1)}, {{4, 1}, R(1)}}));  // x1^4 x2 + x2^4
        } else {
            CHECK(same_x_up_to_scalar(
                sol, {{{0, 5}, R(2)}, {{1, 3}, R(40)}, {{4, 2}, R(5)}, {{5, 0}, R(2)}}));
        }
    }
}

TEST_CASE("Horn-variable forms of Example 6.1 match the paper's second list") {
    HornConfig e61 = explicit_config(example61_B(), {R(0), R(0)});
    auto polys = all_puiseux(e61);
    REQUIRE(polys.size() == 15);
    // frozen list: all 15 y-solutions up to scalar
    std::vector<std::map<RatVec2, Rat>> expected{
        yterms({{{R(0), R(0)}, R(1)}}),
        yterms({{{R(1), R(-3, 5)}, R(1)}}),
        yterms({{{R(2), R(-6, 5)}, R(1)}}),
        yterms({{{R(3), R(-9, 5)}, R(1)}}),
        yterms({{{R(1), R(-4, 5)}, R(1)}}),
        yterms({{{R(2), R(-7, 5)}, R(1)}}),
        yterms({{{R(3), R(-2)}, R(1)}}),
        yterms({{{R(4), R(-13, 5)}, R(1)}}),
        yterms({{{R(2), R(-8, 5)}, R(1)}}),
        yterms({{{R(3), R(-11, 5)}, R(1)}}),
        yterms({{{R(4), R(-14, 5)}, R(1)}}),
        yterms({{{R(5), R(-17, 5)}, R(1)}}),
        yterms({{{R(4), R(-12, 5)}, R(1)}, {{R(3), R(-12, 5)}, R(4)}}),
        yterms({{{R(5), R(-16, 5)}, R(1)}, {{R(4), R(-16, 5)}, R(1)}}),
        yterms({{{R(6), R(-4)}, R(5)},
                 {{R(5), R(-3)}, R(2)},
                 {{R(5), R(-4)}, R(2)},
                 {{R(4), R(-3)}, R(40)}})};
    for (const auto& want : expected) {
        bool found = false;
        for (const auto& p : polys)
            if (same_up_to_scalar(p.terms, want)) { found = true; break; }
        CHECK_MESSAGE(found, "missing a paper solution");
    }
    // the x-pair mapping agrees with the full-system solution for n = 2
    for (const auto& p : polys) {
        auto ps = admissible_pairs(e61);
        auto mapped = to_horn_variables(p.x_terms, ps[0]);
        CHECK(same_up_to_scalar(mapped, p.terms));
    }
}

TEST_CASE("monomial mapping examples") {
    HornConfig e61 = explicit_config(example61_B(), {R(0), R(0)});
    auto ps = admissible_pairs(e61);
    std::map<XPoint, Rat> x1{{{1, 0}, R(1)}};
    auto m = to_horn_variables(x1, ps[0]);
    REQUIRE(m.size() == 1);
    CHECK(m.begin()->first == RatVec2{R(1), R(-3, 5)});
    std::map<XPoint, Rat> c1{{{0, 0}, R(7)}};
    auto mc = to_horn_variables(c1, ps[0]);
    CHECK(mc.begin()->first == RatVec2{R(0), R(0)});
    CHECK(mc.begin()->second == 7);
}

TEST_CASE("G3 Puiseux monomial exponent formula") {
    // falling Horn(B_G3, (a', a, t)): the single Puiseux solution is the
    // monomial with exponent (-(a+2a')/3, -(2a+a')/3), independent of t
    auto check_g3 = [](const Rat& a, const Rat& ap, const Rat& t) {
        HornConfig cfg = explicit_config(g3_B(), {ap, a, t});
        auto polys = all_puiseux(cfg);
        REQUIRE(polys.size() == 1);
        REQUIRE(polys[0].terms.size() == 1);
        RatVec2 e = polys[0].terms.begin()->first;
        CHECK(e.a == -(a + 2 * ap) / 3);
        CHECK(e.b == -(2 * a + ap) / 3);
    };
    check_g3(Rat(3, 7), Rat(5, 11), Rat(1, 13));
    check_g3(Rat(-2, 5), Rat(7, 3), Rat(0));
}

TEST_CASE("F1 has no Puiseux solutions") {
    CHECK(all_puiseux(generic_config(f1_B())).empty());
}

TEST_CASE("counts and annihilation on regression and random matrices") {
    std::vector<IntMatrix> suite{example32_B(), example32_Bprime(), g3_B(), f1_B(), twisted_cubic_B()};
    std::mt19937_64 rng(51);
    for (int t = 0; t < 25; ++t) suite.push_back(random_zero_sum_matrix(rng, 4));
    int idx = 0;
    for (const auto& B : suite) {
        HornConfig cfg = generic_config(B, 900 + idx++);
        auto polys = all_puiseux(cfg);
        CHECK(Int(polys.size()) == puiseux_rank(cfg));
        std::set<RatVec2> seen;
        for (const auto& p : polys) {
            CHECK(annihilated_by_horn(cfg, p.terms));
            for (const auto& [e, c] : p.terms) {
                CHECK(c != 0);
                CHECK(seen.insert(e).second);  // disjoint supports
            }
        }
    }
}

TEST_CASE("orientation invariance: negating a y-coordinate flips exponents only") {
    // Horn(B*diag(1,-1), c) is the image of Horn(B, c) under y2 -> 1/y2
    for (const auto& B : {example32_B(), example32_Bprime(), g3_B()}) {
        IntMatrix Bn = B;
        for (int i = 0; i < B.rows(); ++i) Bn.at(i, 1) = -B.at(i, 1);
        HornConfig cfg = generic_config(B, 77);
        HornConfig cfgn = generic_config(Bn, 77);
        REQUIRE(cfg.c() == cfgn.c());
        auto a = all_puiseux(cfg);
        auto b = all_puiseux(cfgn);
        REQUIRE(a.size() == b.size());
        for (size_t k = 0; k < a.size(); ++k) {
            std::map<RatVec2, Rat> flipped;
            for (const auto& [e, c] : b[k].terms) flipped[RatVec2{e.a, -e.b}] = c;
            CHECK(same_up_to_scalar(a[k].terms, flipped));
        }
    }
}

TEST_CASE("supports stay in the nonnegative quadrant after orientation") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 20; ++t) {
        IntMatrix B = random_zero_sum_matrix(rng, 5);
        HornConfig cfg = generic_config(B, 500 + t);
        for (const auto& ps : admissible_pairs(cfg))
            for (const auto& s : enumerate_supports(ps))
                for (const auto& [u, v] : s) {
                    CHECK(u >= 0);
                    CHECK(v >= 0);
                }
    }
}
