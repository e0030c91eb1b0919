#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stacky/error.hpp"
#include "stacky/hilbert.hpp"
#include "stacky/present.hpp"
#include "stacky/verify.hpp"

using namespace stacky;

namespace {

Poly poly_of(std::initializer_list<std::pair<int, int>> terms) {
    Poly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("base_presentation rows") {
    {
        Presentation p = base_presentation(parse_signature("(2;-;0)"), CurveFlags{},
                                           GinKind::Generic);
        CHECK(p.P_R == poly_of({{1, 2}, {3, 1}}));
        CHECK(p.P_I == poly_of({{6, 1}}));
        CHECK(p.gin.monomial_strings(p.vars) == std::vector<std::string>{"y[3]^2"});
    }
    {
        Presentation p = base_presentation(parse_signature("(1;2;0)"), CurveFlags{},
                                           GinKind::Generic);
        CHECK(p.P_R == poly_of({{1, 1}, {4, 1}, {6, 1}}));
        CHECK(p.P_I == poly_of({{12, 1}}));
        CHECK(p.gin.monomial_strings(p.vars) == std::vector<std::string>{"y[6]^2"});
    }
    {
        // Hecke: P_R = t^2 + ... + t^e; relations Phi(3..e-1).
        Presentation p = base_presentation(parse_signature("(0;2,6;1)"), CurveFlags{},
                                           GinKind::Generic);
        CHECK(p.P_R == Poly::range(2, 6));
        std::vector<int> es{3, 4, 5};
        CHECK(p.P_I == phi_helper(es));
    }
    CHECK_THROWS_AS(base_presentation(parse_signature("(0;2,3,11;0)"), CurveFlags{},
                                      GinKind::Generic),
                    NotABaseCase);
}

TEST_CASE("canonical_presentation dispatch") {
    {
        // Trivial and zero-degree rings.
        Presentation p = canonical_presentation(parse_signature("(0;2,3;0)"));
        CHECK(p.P_R.is_zero());
        p = canonical_presentation(parse_signature("(0;2,3,6;0)"));
        CHECK(p.P_R == poly_of({{6, 1}}));
        CHECK(p.P_I.is_zero());
        p = canonical_presentation(parse_signature("(0;2,2;1)"));
        CHECK(p.P_R == poly_of({{2, 1}}));
        p = canonical_presentation(parse_signature("(1;-;0)"));
        CHECK(p.P_R == poly_of({{1, 1}}));
    }
    {
        // (0;2,3,12;0) via three raises from (0;2,3,9;0).
        Presentation p = canonical_presentation(parse_signature("(0;2,3,12;0)"));
        CHECK(p.P_R == poly_of({{6, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}}));
    }
    {
        Presentation p = canonical_presentation(parse_signature("(1;2,2;0)"));
        CHECK(p.P_R == poly_of({{1, 1}, {2, 1}, {4, 1}}));
        CHECK(p.P_I == poly_of({{8, 1}}));
    }
    {
        Presentation p = canonical_presentation(parse_signature("(3;-;0)"));
        CHECK(p.P_R == poly_of({{1, 3}}));
        CHECK(p.P_I == poly_of({{4, 1}}));
    }
    {
        // Genus-1 chain: (1;2,3;0) stays within the 3e/6e bounds.
        Presentation p = canonical_presentation(parse_signature("(1;2,3;0)"));
        CHECK(p.P_R.degree() <= 9);
        CHECK(p.P_I.degree() <= 18);
        auto rep = hilbert_consistency(p, p.sig, 30);
        CHECK(rep.all_pass());
    }
    {
        // Mixed genus-0 log case reached through the derived base.
        Presentation p = canonical_presentation(parse_signature("(0;2,2,3;1)"));
        auto rep = hilbert_consistency(p, p.sig, default_verify_horizon(p.sig));
        CHECK(rep.all_pass());
    }
}

TEST_CASE("degree_bounds") {
    {
        DegreeBounds b = degree_bounds(parse_signature("(0;2,3,7;0)"));
        CHECK(b.exceptional);
        CHECK(b.gen_bound == 21);
        CHECK(b.rel_bound == 42);
    }
    {
        DegreeBounds b = degree_bounds(parse_signature("(0;2,2,2,2,2;0)"));
        CHECK(b.exceptional);
        CHECK(b.gen_bound == 5);
        CHECK(b.rel_bound == 10);
    }
    {
        DegreeBounds b = degree_bounds(parse_signature("(2;5;1)"));
        CHECK_FALSE(b.exceptional);
        CHECK(b.sharp);
        CHECK(b.gen_bound == 5);
        CHECK(b.rel_bound == 10);
    }
    CHECK_THROWS_AS(degree_bounds(parse_signature("(0;2,3;0)")), NotHyperbolic);
}

TEST_CASE("hilbert_series") {
    {
        Signature sig = parse_signature("(2;-;0)");
        Presentation p = canonical_presentation(sig);
        HilbertSeries hs = hilbert_series(sig, p);
        CHECK(hs.numerator == (Poly(1) + Poly::term(6, -1)));  // 1 - t^6
        CHECK(hs.denominator_exponents == std::vector<int>{1, 1, 3});
    }
    {
        Signature sig = parse_signature("(1;-;0)");
        Presentation p = canonical_presentation(sig);
        HilbertSeries hs = hilbert_series(sig, p);
        CHECK(hs.numerator == Poly(1));
        CHECK(hs.denominator_exponents == std::vector<int>{1});
    }
    {
        // Weighted plane curve: (1 - t^42) over (1-t^6)(1-t^14)(1-t^21),
        // verified against dimensions to degree 100.
        Signature sig = parse_signature("(0;2,3,7;0)");
        Presentation p = canonical_presentation(sig);
        HilbertSeries hs = hilbert_series(sig, p);
        CHECK(hs.numerator == (Poly(1) + Poly::term(42, -1)));
        CHECK(hs.denominator_exponents == std::vector<int>{6, 14, 21});
        auto dims = expand_series(hs, 100);
        for (long long d = 0; d <= 100; ++d) CHECK(dims[d] == dim_h0(sig, d));
    }
}

TEST_CASE("phi_helper") {
    CHECK(phi_helper({0, 1, 2}) ==
          (Poly(1) + Poly::term(1) + Poly::term(2, 2) + Poly::term(3) + Poly::term(4)));
    CHECK(phi_helper({}).is_zero());
    // Coefficient identity for Phi(0..k): min(floor(i/2)+1, k+1-ceil(i/2)).
    for (int k = 1; k <= 50; ++k) {
        std::vector<int> es;
        for (int i = 0; i <= k; ++i) es.push_back(i);
        Poly phi = phi_helper(es);
        for (int i = 0; i <= 2 * k; ++i) {
            long long want = std::min<long long>(i / 2 + 1, k + 1 - (i + 1) / 2);
            CHECK(phi.coeff(i) == want);
        }
    }
}

TEST_CASE("normalize_flags") {
    CurveFlags f;
    CHECK(normalize_flags(parse_signature("(2;-;0)"), f).hyperelliptic);
    CHECK(normalize_flags(parse_signature("(4;-;0)"), f).exceptional);
    f.hyperelliptic = true;
    CHECK_FALSE(normalize_flags(parse_signature("(4;-;0)"), f).exceptional);
    f.exceptional = true;
    CHECK_THROWS_AS(normalize_flags(parse_signature("(5;-;0)"), f), Error);
}
