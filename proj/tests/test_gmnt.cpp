#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "stacky/error.hpp"
#include "stacky/gmnt.hpp"

using namespace stacky;

namespace {

// Independent oracle transcribed from the genus >= 2 propositions (the
// nonhyperelliptic and hyperelliptic characterizations), rather than from
// the decision table.
std::optional<bool> oracle_ge2(int g, bool hyp, long long a, long long b, bool afix, bool bfix,
                               bool equiv) {
    if (a < b) {
        std::swap(a, b);
        std::swap(afix, bfix);
    }
    if (!hyp) {
        if (afix || bfix) return std::nullopt;  // not meaningful
        if (a == 0 && b == 0) return g == 2 ? true : true;  // Max Noether
        if (a == 1 || b == 1) return false;
        if (a >= 2 && b == 0) return true;
        if (a == 2 && b == 2) return !equiv;
        return true;  // a >= 3, b >= 2
    }
    if (a == 0 && b == 0) return g == 2;
    if (a == 1 || b == 1) return false;
    if (a == 2 && b == 0) return !afix;
    if (a >= 3 && b == 0) return true;
    if (a == 2 && b == 2) return !equiv || !(afix && bfix);
    return true;  // a >= 3, b >= 2
}

}  // namespace

TEST_CASE("spec examples") {
    {
        GmntQuery q;
        q.g = 3;
        q.hyperelliptic = true;
        q.degE = 0;
        q.degEp = 0;
        CHECK_FALSE(gmnt_surjective(q));
    }
    {
        GmntQuery q;
        q.g = 2;
        q.degE = 3;
        q.degEp = 2;
        CHECK(gmnt_surjective(q));
    }
    {
        GmntQuery q;
        q.g = 4;
        q.degE = 5;
        q.degEp = 1;
        CHECK_FALSE(gmnt_surjective(q));
    }
}

TEST_CASE("exhaustive grid against the proposition oracle (g >= 2)") {
    for (int g = 2; g <= 6; ++g)
        for (int hyp = 0; hyp <= 1; ++hyp)
            for (long long a = 0; a <= 5; ++a)
                for (long long b = 0; b <= 5; ++b)
                    for (int afix = 0; afix <= hyp; ++afix)
                        for (int bfix = 0; bfix <= hyp; ++bfix)
                            for (int equiv = 0; equiv <= 1; ++equiv) {
                                if (g == 2 && !hyp) continue;  // genus 2 is hyperelliptic
                                auto expected = oracle_ge2(g, hyp, a, b, afix, bfix, equiv);
                                if (!expected) continue;
                                GmntQuery q;
                                q.g = g;
                                q.hyperelliptic = static_cast<bool>(hyp);
                                q.degE = a;
                                q.degEp = b;
                                q.E_hyp_fixed = static_cast<bool>(afix);
                                q.Ep_hyp_fixed = static_cast<bool>(bfix);
                                q.E_equiv_Ep = static_cast<bool>(equiv);
                                CAPTURE(g);
                                CAPTURE(hyp);
                                CAPTURE(a);
                                CAPTURE(b);
                                CHECK(gmnt_surjective(q) == *expected);
                            }
}

TEST_CASE("symmetry in (E, E')") {
    for (int g = 2; g <= 5; ++g)
        for (long long a = 0; a <= 5; ++a)
            for (long long b = 0; b <= 5; ++b)
                for (int hyp = 0; hyp <= 1; ++hyp) {
                    if (g == 2 && !hyp) continue;
                    GmntQuery q;
                    q.g = g;
                    q.hyperelliptic = static_cast<bool>(hyp);
                    q.degE = a;
                    q.degEp = b;
                    q.E_hyp_fixed = false;
                    q.Ep_hyp_fixed = false;
                    q.E_equiv_Ep = false;
                    GmntQuery swapped = q;
                    std::swap(swapped.degE, swapped.degEp);
                    CHECK(gmnt_surjective(q) == gmnt_surjective(swapped));
                }
}

TEST_CASE("genus 0 lemma") {
    GmntQuery q;
    q.g = 0;
    q.degD = -3;
    q.degDp = 1;
    CHECK(gmnt_surjective(q));  // deg(D + D') < 0
    q.degD = 2;
    q.degDp = 3;
    CHECK(gmnt_surjective(q));
    q.degD = -1;
    q.degDp = 4;
    CHECK_FALSE(gmnt_surjective(q));  // mixed signs, nonnegative total
}

TEST_CASE("genus 1 lemma") {
    GmntQuery q;
    q.g = 1;
    q.degD = 3;
    q.degDp = 1;
    CHECK_FALSE(gmnt_surjective(q));  // degree-1 factor
    q.degD = 2;
    q.degDp = 2;
    q.D_equiv_Dp = true;
    CHECK_FALSE(gmnt_surjective(q));
    q.D_equiv_Dp = false;
    CHECK(gmnt_surjective(q));
    q.degD = 3;
    q.degDp = 2;
    q.D_equiv_Dp.reset();
    CHECK(gmnt_surjective(q));  // flag not consulted off the (2,2) cell
    q.degD = 5;
    q.degDp = 0;
    CHECK(gmnt_surjective(q));
}

TEST_CASE("unset flags raise InsufficientFlags only when consulted") {
    GmntQuery q;
    q.g = 5;
    q.degE = 0;
    q.degEp = 0;
    CHECK_THROWS_AS(gmnt_surjective(q), InsufficientFlags);  // needs hyperelliptic
    q.degE = 4;
    q.degEp = 3;
    CHECK(gmnt_surjective(q));  // no flag consulted in the (>=3,>=2) cell
    q.degE = 2;
    q.degEp = 2;
    CHECK_THROWS_AS(gmnt_surjective(q), InsufficientFlags);  // needs E ~ E'
    q.E_equiv_Ep = false;
    CHECK(gmnt_surjective(q));
}
