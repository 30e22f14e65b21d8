#include "stirlab/families.hpp"
#include "stirlab/grammar.hpp"

#include <doctest.h>

using namespace stirlab;

TEST_CASE("displayed small members") {
    CHECK(build_by_enumeration(FamilyTag::M, 3) == parse_poly("1+10*x+4*x^2"));
    CHECK(build_by_recurrence(FamilyTag::N, 3) == parse_poly("4*x+10*x^2+x^3"));
    CHECK(build_by_recurrence(FamilyTag::B, 2) == parse_poly("1+6*x+x^2"));
    CHECK(build_by_recurrence(FamilyTag::Ak, 3, {}) == parse_poly("(1+k*x)^2+(k+k^2)*x"));
    CHECK(build_by_enumeration(FamilyTag::PQ, 3).substitute({{"y", Poly(1L)}}) ==
          parse_poly("p^3*q^3+(q+3*p*q^2)*x+q*x^2"));
    CHECK(build_by_enumeration(FamilyTag::Pxy, 2) == parse_poly("x+x*y+x^2*y"));
    CHECK(build_by_grammar(FamilyTag::AlphaBeta, 2) ==
          parse_poly("(alpha*x+beta*y)^2+(alpha+beta)*x*y"));
    CHECK(build_by_grammar(FamilyTag::Mq, 3) == parse_poly("q^3+4*q*x+6*q^2*x+4*q*x^2"));
    CHECK(build_by_grammar(FamilyTag::A, 3) == parse_poly("x+4*x^2+x^3"));
}

TEST_CASE("routes agree at moderate sizes") {
    for (int n = 0; n <= 5; ++n) {
        Poly a = build_by_enumeration(FamilyTag::A, n);
        CHECK(a == build_by_recurrence(FamilyTag::A, n));
        CHECK(a == build_by_grammar(FamilyTag::A, n));

        Poly m = build_by_enumeration(FamilyTag::M, n);
        CHECK(m == build_by_recurrence(FamilyTag::M, n));
        CHECK(m == build_by_grammar(FamilyTag::M, n));

        Poly nn = build_by_enumeration(FamilyTag::N, n);
        CHECK(nn == build_by_recurrence(FamilyTag::N, n));
        CHECK(nn == build_by_grammar(FamilyTag::N, n));

        Poly pq = build_by_enumeration(FamilyTag::PQ, n);
        CHECK(pq == build_by_recurrence(FamilyTag::PQ, n));
        CHECK(pq == build_by_grammar(FamilyTag::PQ, n));

        Poly ab = build_by_enumeration(FamilyTag::AlphaBeta, n);
        CHECK(ab == build_by_recurrence(FamilyTag::AlphaBeta, n));
        CHECK(ab == build_by_grammar(FamilyTag::AlphaBeta, n));

        Poly pxy = build_by_enumeration(FamilyTag::Pxy, n);
        CHECK(pxy == build_by_recurrence(FamilyTag::Pxy, n));
        CHECK(pxy == build_by_grammar(FamilyTag::Pxy, n));

        Poly mq = build_by_enumeration(FamilyTag::Mq, n);
        CHECK(mq == build_by_recurrence(FamilyTag::Mq, n));
        CHECK(mq == build_by_grammar(FamilyTag::Mq, n));

        Poly b = build_by_enumeration(FamilyTag::B, n);
        CHECK(b == build_by_recurrence(FamilyTag::B, n));

        for (int k = 1; k <= 3; ++k) {
            Poly ak = build_by_enumeration(FamilyTag::Ak, n, k);
            CHECK(ak == build_by_recurrence(FamilyTag::Ak, n, k));
            CHECK(ak == build_by_grammar(FamilyTag::Ak, n, k));
        }
        CHECK(build_by_enumeration(FamilyTag::Ak, n, {}) ==
              build_by_recurrence(FamilyTag::Ak, n, {}));
    }
}

TEST_CASE("one-parameter family specializes to the Eulerian polynomial") {
    for (int n = 1; n <= 8; ++n) {
        Poly ak1 = build_by_recurrence(FamilyTag::Ak, n, 1);
        CHECK(Poly::var("x") * ak1 == build_by_recurrence(FamilyTag::A, n));
    }
}

TEST_CASE("left-plateau polynomial is the reversed plateau polynomial") {
    for (int n = 0; n <= 7; ++n) {
        Poly m = build_by_recurrence(FamilyTag::M, n);
        CHECK(build_by_recurrence(FamilyTag::N, n) == m.reverse_in("x", n));
    }
}

TEST_CASE("coefficient tables") {
    auto gamma2 = coeff_table(FamilyTag::GammaK, 2, {});
    CHECK(table_get(gamma2.primary, 2, 0) == Poly(1L));
    CHECK(table_get(gamma2.primary, 0, 1) == parse_poly("k+k^2"));
    CHECK(table_get(gamma2.primary, 5, 5).is_zero());

    auto xieta3 = coeff_table(FamilyTag::XiEta, 3, {});
    CHECK(table_get(xieta3.primary, 0, 0) == Poly(1L));
    CHECK(table_get(xieta3.primary, 1, 0) == Poly(26L));
    CHECK(table_get(xieta3.secondary, 0, 0) == Poly(7L));
    CHECK(table_get(xieta3.secondary, 1, 0) == Poly(17L));
    auto xieta2 = coeff_table(FamilyTag::XiEta, 2, {});
    CHECK(table_get(xieta2.primary, 1, 0) == Poly(5L));
    CHECK(table_get(xieta2.secondary, 0, 0) == Poly(3L));

    auto fg2 = coeff_table(FamilyTag::FG, 2, {});
    CHECK(table_get(fg2.primary, 0, 0) == parse_poly("q^2"));
    CHECK(table_get(fg2.primary, 1, 0) == parse_poly("6*q-q^2"));
    CHECK(table_get(fg2.secondary, 0, 0) == parse_poly("(2-q)*(2+q)"));

    auto ab2 = coeff_table(FamilyTag::ABdecomp, 3, {});
    CHECK(table_get(ab2.primary, 0, 0) == parse_poly("1+7*x+x^2"));
    CHECK(table_get(ab2.secondary, 0, 0) == parse_poly("3+3*x"));

    auto ank3 = coeff_table(FamilyTag::Ank, 3, {});
    CHECK(table_get(ank3.primary, 1, 0) == Poly(1L));
    CHECK(table_get(ank3.primary, 2, 0) == Poly(2L));

    auto f2 = coeff_table(FamilyTag::Fn, 2, {});
    CHECK(table_get(f2.primary, 0, 0) == parse_poly("1+3*x+5*x^2"));
}

TEST_CASE("decomposition pair rebuilds the plateau polynomial") {
    for (int n = 1; n <= 7; ++n) {
        auto [a, b] = ab_decomp_pair(n);
        CHECK(a + Poly::var("x") * b == build_by_recurrence(FamilyTag::M, n));
    }
}

TEST_CASE("interleaved polynomial splits into the xi/eta pair") {
    // F_n(x) = xi_n(x^2) + x eta_n(x^2)
    for (int n = 1; n <= 8; ++n) {
        auto [xi, eta] = xi_eta_rows(n);
        Poly expected;
        const Poly x = Poly::var("x");
        for (size_t i = 0; i < xi.size(); ++i) expected += xi[i] * x.pow(2 * static_cast<int>(i));
        for (size_t j = 0; j < eta.size(); ++j)
            expected += eta[j] * x.pow(2 * static_cast<int>(j) + 1);
        CHECK(build_by_recurrence(FamilyTag::Fn, n) == expected);
    }
}

TEST_CASE("parametrization transform rejects malformed input") {
    CHECK_THROWS_AS(transform_pq(parse_poly("p^2*q"), "p", "q", Poly(1L), Poly(1L)), const Error&);
    CHECK(transform_pq(parse_poly("p*q^2"), "p", "q", Poly::var("u"), Poly::var("v")) ==
          parse_poly("u*v"));
}

TEST_CASE("route availability") {
    CHECK(has_route(FamilyTag::B, Route::enumeration, false));
    CHECK_FALSE(has_route(FamilyTag::B, Route::grammar, false));
    CHECK(has_route(FamilyTag::Ak, Route::grammar, false));
    CHECK_FALSE(has_route(FamilyTag::Ak, Route::grammar, true));
    CHECK_FALSE(has_route(FamilyTag::GammaK, Route::enumeration, false));
    CHECK_THROWS_AS(build_by_grammar(FamilyTag::B, 3), const Error&);
    CHECK_THROWS_AS(build_by_enumeration(FamilyTag::GammaK, 3), const Error&);
    CHECK_THROWS_AS(build_by_grammar(FamilyTag::Ak, 3, {}), const Error&);
}

TEST_CASE("family names round-trip") {
    for (const char* name : {"A", "B", "M", "N", "Ak", "PQ", "AlphaBeta", "Pxy", "Mq",
                             "GammaK", "ZetaK2", "XiEta", "FG", "ABdecomp", "Fn", "ank"}) {
        auto tag = family_from_string(name);
        REQUIRE(tag.has_value());
        CHECK(family_name(*tag) == name);
    }
    CHECK_FALSE(family_from_string("nope").has_value());
}
