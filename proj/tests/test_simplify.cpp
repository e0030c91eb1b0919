#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"
#include "stacky/monomial.hpp"
#include "stacky/simplify.hpp"

using namespace stacky;

namespace {

std::vector<Fraction> poly(std::initializer_list<long long> coeffs) {
    std::vector<Fraction> p;
    for (long long c : coeffs) p.push_back(Fraction(c));
    return p;
}

}  // namespace

TEST_CASE("epsilon") {
    Signature s = parse_signature("(0;2,2,3,3;0)");
    CHECK(epsilon(s, 1, 2, 4) == 0);
    CHECK(epsilon(s, 3, 2, 4) == 1);
    CHECK(epsilon(s, 1, 3, 3) == 1);
    CHECK(epsilon(s, 3, 3, 3) == 0);
    CHECK(epsilon(s, 2, 0, 5) == 0);
    CHECK_THROWS_AS(epsilon(s, 5, 1, 1), Error);
}

TEST_CASE("epsilon symmetry and multiples") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ed(2, 12), dd(0, 40);
    for (int k = 0; k < 300; ++k) {
        Signature sig{0, {ed(rng), ed(rng)}, 0};
        std::sort(sig.e.begin(), sig.e.end());
        int i = 1 + (k % 2);
        long long d1 = dd(rng), d2 = dd(rng);
        CHECK(epsilon(sig, i, d1, d2) == epsilon(sig, i, d2, d1));
        CHECK(epsilon(sig, i, static_cast<long long>(sig.e[i - 1]) * (1 + k % 4), d2) == 0);
    }
}

TEST_CASE("floor additivity identity with epsilon (genus 0)") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> rd(1, 5), ed(2, 12), dd(0, 30), deld(0, 3);
    for (int k = 0; k < 200; ++k) {
        Signature sig;
        sig.g = 0;
        int r = rd(rng);
        for (int i = 0; i < r; ++i) sig.e.push_back(ed(rng));
        std::sort(sig.e.begin(), sig.e.end());
        sig.delta = deld(rng);
        long long d1 = dd(rng), d2 = dd(rng);
        long long eps_sum = 0;
        for (int i = 1; i <= sig.r(); ++i) eps_sum += epsilon(sig, i, d1, d2);
        CHECK(floor_degree(sig, d1 + d2) ==
              floor_degree(sig, d1) + floor_degree(sig, d2) + eps_sum);
    }
}

TEST_CASE("generator_superfluous") {
    CHECK(generator_superfluous(parse_signature("(0;2,3,7;0)"), 42));
    CHECK_FALSE(generator_superfluous(parse_signature("(0;2,3,7;0)"), 21));
    CHECK(generator_superfluous(parse_signature("(0;2,2,2,2,3;0)"), 6));
    // Nothing superfluous among the minimal generators of (0;2,2,2,2,2;0).
    for (long long d : {2, 5}) CHECK_FALSE(generator_superfluous(parse_signature("(0;2,2,2,2,2;0)"), d));
    // (0;2,2,3,3;0): criterion (ii) fails in degree 6 (both gens kept).
    CHECK_FALSE(generator_superfluous(parse_signature("(0;2,2,3,3;0)"), 6));
}

TEST_CASE("early_codim") {
    // floor_degree((0;2,3,7;0), 8) = -1 < r_8 = 0: absent.
    CHECK_FALSE(early_codim(parse_signature("(0;2,3,7;0)"), 8).has_value());
    CHECK(early_codim(parse_signature("(0;2,3,7;0)"), 12) == 0);  // floor 0 >= 0
    Signature s = parse_signature("(0;2,3,13;0)");
    REQUIRE(floor_degree(s, 12) >= 1);
    CHECK(early_codim(s, 12) == 1);  // r_12 = #{e_i >= 12} = 1
    // d > max e gives the empty set whenever the floor is nonnegative.
    CHECK(early_codim(parse_signature("(0;2,2,2,2,2;0)"), 4) == 0);
    // Absent when the floor cannot accommodate the codimension.
    CHECK_FALSE(early_codim(parse_signature("(0;5,5,5;0)"), 4).has_value());
}

TEST_CASE("effective_euclid_check") {
    // span{t, t+1} = all of degree <= 1.
    CHECK(effective_euclid_check({poly({0, 1}), poly({1, 1})}, 1));
    // gcd = t: span{t^2, t^2+t} = t * (deg <= 1).
    CHECK(effective_euclid_check({poly({0, 0, 1}), poly({0, 1, 1})}, 2));
    // Single polynomial: both sides are t^2 * (deg <= 1).
    CHECK(effective_euclid_check({poly({0, 0, 1})}, 3));
    // Degree bound not met.
    CHECK_THROWS_AS(effective_euclid_check({poly({0, 1}), poly({1, 1})}, 0), Error);
    CHECK_THROWS_AS(effective_euclid_check({poly({0, 0})}, 2), Error);
}

TEST_CASE("simplify_presentation examples") {
    {
        auto simp = simplify_toric(parse_signature("(0;2,3,7;0)"));
        CHECK(simp.P_R.degree_multiset() == std::vector<int>{6, 14, 21});
        CHECK(simp.P_I.degree_multiset() == std::vector<int>{42});
        CHECK(simp.initial_ideal.monomial_strings(simp.vars) ==
              std::vector<std::string>{"x[21]^2"});
    }
    {
        auto simp = simplify_toric(parse_signature("(0;2,2,2,2,3;0)"));
        CHECK(simp.P_R.degree_multiset() == std::vector<int>{2, 2, 3});
        CHECK(simp.P_I.degree_multiset() == std::vector<int>{8});
    }
    {
        // Nothing superfluous: the presentation is unchanged.
        auto simp = simplify_toric(parse_signature("(0;2,2,2,2,2;0)"));
        CHECK(simp.P_R.degree_multiset() == std::vector<int>{2, 2, 5});
        CHECK(simp.P_I.degree_multiset() == std::vector<int>{10});
    }
    {
        // Table row with a linear relation: generators 2,3,6,6.
        auto simp = simplify_toric(parse_signature("(0;2,2,3,3;0)"));
        CHECK(simp.P_R.degree_multiset() == std::vector<int>{2, 3, 6, 6});
        CHECK(simp.P_I.degree_multiset() == std::vector<int>{6, 12});
    }
    {
        // (0;2,3,10;0): minimal relations in degrees 16 and 18.
        auto simp = simplify_toric(parse_signature("(0;2,3,10;0)"));
        CHECK(simp.P_R.degree_multiset() == std::vector<int>{6, 8, 9, 10});
        CHECK(simp.P_I.degree_multiset() == std::vector<int>{16, 18});
    }
}

TEST_CASE("simplified staircase matches dimensions") {
    for (auto text : {"(0;2,3,7;0)", "(0;2,3,9;0)", "(0;2,2,2,2,3;0)", "(0;2,2,3,3;0)",
                      "(0;2,4,8;0)", "(0;3,5,5;0)", "(0;2,3;1)", "(0;4,4;1)"}) {
        Signature sig = parse_signature(text);
        CAPTURE(text);
        auto simp = simplify_toric(sig);
        EffMonoid eff = eff_compute(sig);
        long long N = std::min<long long>(2 * (period_lcm(sig) + eff.saturation), 200);
        auto counts = staircase_counts_up_to(simp.initial_ideal, simp.vars.degrees(), N);
        for (long long d = 0; d <= N; ++d) CHECK(counts[d] == dim_h0(sig, d));
    }
}
