#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stacky/effmon.hpp"
#include "stacky/error.hpp"
#include "stacky/tables.hpp"

using namespace stacky;

TEST_CASE("membership") {
    Signature s = parse_signature("(0;2,3,7;0)");
    CHECK(eff_member(s, 12));
    CHECK_FALSE(eff_member(s, 7));
    CHECK(eff_member(s, 0));
    // The published list of small members.
    std::vector<long long> members;
    for (long long d = 0; d <= 30; ++d)
        if (eff_member(s, d)) members.push_back(d);
    CHECK(members == std::vector<long long>{0, 6, 12, 14, 18, 20, 21, 24, 26, 27, 28, 30});
}

TEST_CASE("eff_compute table rows") {
    auto s = parse_signature("(0;2,3,7;0)");
    EffMonoid m = eff_compute(s);
    CHECK(m.generators == std::vector<int>{6, 14, 21});
    CHECK(m.saturation == 44);

    m = eff_compute(parse_signature("(0;3,3,4;0)"));
    CHECK(m.generators == std::vector<int>{3, 8});
    CHECK(m.saturation == 14);

    m = eff_compute(parse_signature("(0;2,2,2,3;0)"));
    CHECK(m.generators == std::vector<int>{2, 9});
    CHECK(m.saturation == 8);

    m = eff_compute(parse_signature("(0;2,4,6;0)"));
    CHECK(m.generators == std::vector<int>{4, 6, 11});
    CHECK(m.saturation == 14);

    CHECK_THROWS_AS(eff_compute(parse_signature("(0;2,3;0)")), NotHyperbolic);
    CHECK_THROWS_AS(eff_compute(parse_signature("(0;2,2,2,2;0)")), NotHyperbolic);
}

TEST_CASE("full embedded effective-monoid table") {
    for (const auto& row : tables::eff_rows()) {
        CAPTURE(format_signature(row.sig));
        EffMonoid m = eff_compute(row.sig);
        CHECK(m.generators == row.generators);
        CHECK(m.saturation == row.saturation);
    }
}

TEST_CASE("eff_classify") {
    CHECK(eff_classify(parse_signature("(0;2,3;1)")).kind == EffClassKind::TwoThreeGenerated);
    auto c = eff_classify(parse_signature("(0;2,2,2,2,2;0)"));
    CHECK(c.kind == EffClassKind::Exceptional);
    CHECK(c.exceptional_case == 3);
    CHECK(eff_classify(parse_signature("(1;2;2)")).kind == EffClassKind::AllNonnegative);
    CHECK(eff_classify(parse_signature("(0;2,3,7;0)")).exceptional_case == 1);
    CHECK(eff_classify(parse_signature("(0;2,2,2,5;0)")).exceptional_case == 2);
}

TEST_CASE("classification agrees with computation") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> rdist(0, 6), edist(2, 10), ddist(0, 4);
    int found = 0;
    while (found < 150) {
        Signature sig;
        sig.g = 0;
        int r = rdist(rng);
        for (int i = 0; i < r; ++i) sig.e.push_back(edist(rng));
        std::sort(sig.e.begin(), sig.e.end());
        sig.delta = ddist(rng);
        if (deg_canonical(sig).sign() <= 0) continue;
        ++found;
        CAPTURE(format_signature(sig));
        EffClass cls = eff_classify(sig);
        EffMonoid m = eff_compute(sig);
        if (cls.kind == EffClassKind::AllNonnegative) {
            CHECK(sig.delta >= 2);
            CHECK(m.saturation <= 1);
            CHECK(m.generators.front() == 1);
        } else if (cls.kind == EffClassKind::TwoThreeGenerated) {
            CHECK(m.generators == std::vector<int>{2, 3});
            CHECK(m.saturation == 2);
        }
    }
}

TEST_CASE("members decompose over the reported generators (DP)") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> rdist(1, 5), edist(2, 12);
    int found = 0;
    while (found < 80) {
        Signature sig;
        sig.g = 0;
        int r = rdist(rng);
        for (int i = 0; i < r; ++i) sig.e.push_back(edist(rng));
        std::sort(sig.e.begin(), sig.e.end());
        sig.delta = 0;
        if (deg_canonical(sig).sign() <= 0) continue;
        if (period_lcm(sig) > 600) continue;
        ++found;
        CAPTURE(format_signature(sig));
        EffMonoid m = eff_compute(sig);
        long long bound = m.saturation + m.period;
        std::vector<char> reachable(bound + 1, 0);
        reachable[0] = 1;
        for (long long d = 1; d <= bound; ++d)
            for (int g : m.generators)
                if (d >= g && reachable[d - g]) reachable[d] = 1;
        for (long long d = 0; d <= bound; ++d)
            CHECK(static_cast<bool>(reachable[d]) == eff_member(sig, d));
    }
}
