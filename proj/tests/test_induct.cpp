#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stacky/error.hpp"
#include "stacky/induct.hpp"
#include "stacky/present.hpp"
#include "stacky/tables.hpp"
#include "stacky/verify.hpp"

using namespace stacky;

namespace {

Poly poly_of(std::initializer_list<std::pair<int, int>> terms) {
    Poly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("add_stacky_point: generic genus-2 base") {
    Presentation base = tables::classical(2, CurveFlags{}, GinKind::Generic);
    Presentation p = add_stacky_point(base, 2);
    // 2t + t^3 plus the new t^2.
    CHECK(p.P_R == poly_of({{1, 2}, {2, 1}, {3, 1}}));
    // P_I' + (P_R' - t)(t^2) with no y-pair terms for e = 2.
    Poly want = poly_of({{6, 1}});
    want += (poly_of({{1, 2}, {3, 1}}) - Poly::term(1)) * Poly::term(2);
    CHECK(p.P_I == want);
    CHECK(p.sig == Signature{2, {2}, 0});
}

TEST_CASE("add_stacky_point: non-minimal genus-1 output is the documented one") {
    Presentation base = *tables::genus1_base(parse_signature("(1;2;0)"));
    Presentation p = add_stacky_point(base, 2);
    CHECK(p.P_R == poly_of({{1, 1}, {2, 1}, {4, 1}, {6, 1}}));
}

TEST_CASE("add_stacky_point: degree-1 base with log points") {
    // (0;;4) has three degree-1 generators; adding e = 3 appends degrees 2, 3.
    Presentation base = tables::log_classical(0, 4, CurveFlags{}, GinKind::Pointed);
    Presentation p = add_stacky_point(base, 3);
    CHECK(p.P_R == poly_of({{1, 3}, {2, 1}, {3, 1}}));
    CHECK(p.sig == Signature{0, {3}, 4});
    auto rep = hilbert_consistency(p, p.sig, 30);
    CHECK(rep.all_pass());
}

TEST_CASE("add_stacky_point hypothesis") {
    Presentation base = tables::classical(0, CurveFlags{}, GinKind::Generic);
    CHECK_THROWS_AS(add_stacky_point(base, 5), HypothesisFails);  // g=0, delta=0
}

TEST_CASE("add_stacky_point_2sat: (0;2^6;0) -> (0;2^7;0)") {
    Presentation base = base_presentation(parse_signature("(0;2,2,2,2,2,2;0)"), CurveFlags{},
                                          GinKind::Generic);
    CHECK(base.P_R == poly_of({{2, 3}, {3, 1}}));
    Presentation p = add_stacky_point_2sat(base, 2);
    // (r-3) t^2 + (r-5) t^3 at r = 7.
    CHECK(p.P_R == poly_of({{2, 4}, {3, 2}}));
    // P_I' + P_R'(t^2 + t^3) - t^4 - t^5 + t^6.
    Poly want = poly_of({{4, 1}, {6, 1}});
    want += poly_of({{2, 3}, {3, 1}}) * (Poly::term(2) + Poly::term(3));
    want += Poly::term(4, -1);
    want += Poly::term(5, -1);
    want += Poly::term(6);
    CHECK(p.P_I == want);
    // Exactly 2m - 1 new relations for a base with m generators.
    CHECK(p.rels.size() == base.rels.size() + 2 * base.gens.size() - 1);
    auto rep = hilbert_consistency(p, p.sig, 30);
    CHECK(rep.all_pass());
}

TEST_CASE("all-2s family closed form") {
    // P(I_r;t) = C(r-4,2)(t^4 + t^6) + (r-4)(r-6) t^5 for r >= 6.
    Presentation p = base_presentation(parse_signature("(0;2,2,2,2,2,2;0)"), CurveFlags{},
                                       GinKind::Generic);
    for (int r = 7; r <= 9; ++r) {
        p = add_stacky_point_2sat(p, 2);
        long long c46 = static_cast<long long>(r - 4) * (r - 5) / 2;
        Poly want = poly_of({{4, static_cast<int>(c46)},
                             {5, static_cast<int>(static_cast<long long>(r - 4) * (r - 6))},
                             {6, static_cast<int>(c46)}});
        CAPTURE(r);
        CHECK(p.P_I == want);
        CHECK(p.P_R == poly_of({{2, r - 3}, {3, r - 5}}));
    }
}

TEST_CASE("check_admissible examples") {
    {
        Presentation p = base_presentation(parse_signature("(0;2,2,2,2,3;0)"), CurveFlags{},
                                           GinKind::Generic);
        auto w = check_admissible(p, {5});
        CHECK(w.admissible());
    }
    {
        Presentation p = base_presentation(parse_signature("(0;2,3,9;0)"), CurveFlags{},
                                           GinKind::Generic);
        CHECK(check_admissible(p, {3}).admissible());
    }
    {
        Presentation p = base_presentation(parse_signature("(0;2,3,7;0)"), CurveFlags{},
                                           GinKind::Generic);
        CHECK_FALSE(check_admissible(p, {3}).admissible());
    }
    {
        // Bases whose raise would break minimality are rejected.
        for (auto text : {"(0;2,3,8;0)", "(0;2,4,5;0)", "(0;2,5,5;0)", "(0;3,3,4;0)",
                          "(0;2,2,2,3;0)", "(0;2,2,3,3;0)"}) {
            Presentation p = base_presentation(parse_signature(text), CurveFlags{},
                                               GinKind::Generic);
            CAPTURE(text);
            CHECK_FALSE(check_admissible(p, {p.sig.r()}).admissible());
        }
    }
    {
        // Paper-confirmed admissible pairs.
        struct Case {
            const char* text;
            std::set<int> J;
        };
        for (auto c : {Case{"(0;2,5,6;0)", {3}}, Case{"(0;2,6,6;0)", {3}},
                       Case{"(0;2,6,6;0)", {2, 3}}, Case{"(0;3,4,5;0)", {3}},
                       Case{"(0;3,5,5;0)", {2, 3}}, Case{"(0;4,4,5;0)", {3}},
                       Case{"(0;2,2,4,4;0)", {3, 4}}, Case{"(0;2,2,2,5;0)", {4}},
                       Case{"(0;3,3,3,3;0)", {2, 3, 4}}, Case{"(0;2,3;1)", {2}},
                       Case{"(0;3,3;1)", {1, 2}}}) {
            Presentation p = base_presentation(parse_signature(c.text), CurveFlags{},
                                               GinKind::Generic);
            CAPTURE(c.text);
            CHECK(check_admissible(p, c.J).admissible());
        }
    }
}

TEST_CASE("raise_orders: (0;2,3,9;0) -> (0;2,3,10;0)") {
    Presentation base = base_presentation(parse_signature("(0;2,3,9;0)"), CurveFlags{},
                                          GinKind::Generic);
    Presentation p = raise_orders(base, {3});
    CHECK(p.sig == Signature{0, {2, 3, 10}, 0});
    CHECK(p.P_R == poly_of({{6, 1}, {8, 1}, {9, 1}, {10, 1}}));
    CHECK(p.P_I == poly_of({{16, 1}, {18, 1}}));
    // Output carries admissibility data for the same J.
    CHECK(check_admissible(p, {3}).admissible());
    auto rep = hilbert_consistency(p, p.sig, default_verify_horizon(p.sig));
    CHECK(rep.all_pass());
}

TEST_CASE("raise_orders chain: P(I_e) = P(I_{e-1}) + t^e P(R_{e-2})") {
    Presentation prev2 = base_presentation(parse_signature("(0;2,3,9;0)"), CurveFlags{},
                                           GinKind::Generic);
    Presentation prev1 = raise_orders(prev2, {3});
    for (int e = 11; e <= 12; ++e) {
        Presentation cur = raise_orders(prev1, {3});
        CAPTURE(e);
        Poly want = prev1.P_I;
        want += Poly::term(e) * prev2.P_R;
        CHECK(cur.P_I == want);
        prev2 = prev1;
        prev1 = cur;
    }
}

TEST_CASE("raise_orders: (0;3,3,6;0) -> (0;3,3,7;0) keeps the Groebner cubic") {
    Presentation base = base_presentation(parse_signature("(0;3,3,6;0)"), CurveFlags{},
                                          GinKind::Generic);
    Presentation p = raise_orders(base, {3});
    CHECK(p.P_R == poly_of({{3, 1}, {5, 1}, {6, 1}, {7, 1}}));
    CHECK(p.P_I == poly_of({{10, 1}, {12, 1}}));
    // gin contains y_7 x_5, y_7 x_3 plus the inherited cubic.
    bool has_y7x5 = false, has_y7x3 = false;
    for (const auto& m : p.gin.gens()) {
        long long deg = m.degree(p.vars);
        if (deg == 12) has_y7x5 = true;
        if (deg == 10) has_y7x3 = true;
    }
    CHECK(has_y7x5);
    CHECK(has_y7x3);
    auto rep = hilbert_consistency(p, p.sig, default_verify_horizon(p.sig));
    CHECK(rep.all_pass());
}

TEST_CASE("poincare updates commute for disjoint added points") {
    Presentation base = tables::classical(3, CurveFlags{}, GinKind::Generic);
    Presentation ab = add_stacky_point(add_stacky_point(base, 2), 5);
    Presentation ba = add_stacky_point(add_stacky_point(base, 5), 2);
    CHECK(ab.P_R == ba.P_R);
    CHECK(ab.P_I == ba.P_I);
    CHECK(ab.sig == ba.sig);
}

TEST_CASE("P_R(1) equals the generator count after every step") {
    Presentation p = tables::classical(2, CurveFlags{}, GinKind::Generic);
    for (int e : {2, 3, 4}) {
        p = add_stacky_point(p, e);
        CHECK(p.P_R.eval_at_one() == static_cast<long long>(p.gens.size()));
        auto rep = hilbert_consistency(p, p.sig, 30);
        CHECK(rep.all_pass());
    }
}
