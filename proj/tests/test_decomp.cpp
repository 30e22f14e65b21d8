#include "stirlab/decomp.hpp"
#include "stirlab/families.hpp"
#include "stirlab/grammar.hpp"

#include <doctest.h>

using namespace stirlab;

TEST_CASE("symmetric decomposition of the displayed plateau polynomials") {
    auto d2 = symmetric_decompose(parse_poly("1+2*x"), 1);
    CHECK(d2.a == parse_poly("1+x"));
    CHECK(d2.b == Poly(1L));

    auto d3 = symmetric_decompose(parse_poly("1+10*x+4*x^2"), 2);
    CHECK(d3.a == parse_poly("1+7*x+x^2"));
    CHECK(d3.b == parse_poly("3+3*x"));

    auto d4 = symmetric_decompose(build_by_recurrence(FamilyTag::M, 4), 3);
    CHECK(d4.a == parse_poly("1+29*x+29*x^2+x^3"));
    CHECK(d4.b == parse_poly("7+31*x+7*x^2"));

    auto d5 = symmetric_decompose(build_by_recurrence(FamilyTag::M, 5), 4);
    CHECK(d5.a == parse_poly("1+101*x+321*x^2+101*x^3+x^4"));
    CHECK(d5.b == parse_poly("15+195*x+195*x^2+15*x^3"));

    // a symmetric polynomial decomposes with b = 0
    Poly pal = parse_poly("1+3*x+3*x^2+x^3");
    auto dp = symmetric_decompose(pal, 3);
    CHECK(dp.a == pal);
    CHECK(dp.b.is_zero());

    CHECK_THROWS_AS(symmetric_decompose(parse_poly("x^3"), 2), const Error&);
}

TEST_CASE("decomposition parts are palindromic and rebuild the input") {
    for (int n = 1; n <= 7; ++n) {
        Poly m = build_by_recurrence(FamilyTag::M, n);
        auto d = symmetric_decompose(m, n - 1);
        CHECK(is_palindromic(d.a, n - 1));
        CHECK(is_palindromic(d.b, n - 2 < 0 ? 0 : n - 2));
        CHECK(d.a + Poly::var("x") * d.b == m);
    }
}

TEST_CASE("gamma expansion") {
    // A_3 over the degree-4 basis: x(1+x)^2 + 2x^2
    auto g = gamma_expand(build_by_recurrence(FamilyTag::A, 3), 4);
    REQUIRE(g.size() == 3);
    CHECK(g[0].is_zero());
    CHECK(g[1] == Poly(1L));
    CHECK(g[2] == Poly(2L));

    auto g2 = gamma_expand(parse_poly("(1+x)^4"), 4);
    CHECK(g2[0] == Poly(1L));
    CHECK(g2[1].is_zero());
    CHECK(g2[2].is_zero());

    auto g3 = gamma_expand(parse_poly("1+3*x+x^2"), 2);
    CHECK(g3[0] == Poly(1L));
    CHECK(g3[1] == Poly(1L));

    CHECK_THROWS_AS(gamma_expand(parse_poly("1+2*x"), 1), const Error&);

    // expansion is unique: reconstruct then expand again
    for (int n = 1; n <= 6; ++n) {
        auto gam = gamma_expand(build_by_recurrence(FamilyTag::A, n), n + 1);
        CHECK(gamma_reconstruct(gam, n + 1) == build_by_recurrence(FamilyTag::A, n));
        CHECK(gamma_expand(gamma_reconstruct(gam, n + 1), n + 1) == gam);
    }
}

TEST_CASE("gamma basis coefficients match the classical recurrence") {
    for (int n = 1; n <= 8; ++n) {
        auto row = ank_row(n);
        Poly rebuilt;
        const Poly x = Poly::var("x");
        for (size_t j = 1; j < row.size(); ++j)
            rebuilt += row[j] * x.pow(static_cast<int>(j)) *
                       (Poly(1L) + x).pow(n + 1 - 2 * static_cast<int>(j));
        CHECK(rebuilt == build_by_recurrence(FamilyTag::A, n));
    }
}

TEST_CASE("positivity predicates") {
    auto r5 = positivity_report(build_by_recurrence(FamilyTag::M, 5), 4);
    CHECK(r5.bi_gamma_positive);
    CHECK(r5.alternatingly_increasing);
    CHECK_FALSE(r5.symmetric);

    auto dip = positivity_report(parse_poly("1+x^2"), 2);
    CHECK_FALSE(dip.unimodal);
    CHECK(dip.symmetric);
    CHECK_FALSE(dip.gamma_positive); // gammas are 1, -2

    auto sym = positivity_report(parse_poly("1+3*x+x^2"), 2);
    CHECK(sym.unimodal);
    CHECK(sym.gamma_positive);

    CHECK_THROWS_AS(positivity_report(parse_poly("1+k*x"), 1), const Error&);
}

TEST_CASE("one-parameter polynomials are bi-gamma-positive at small k") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 7; ++n) {
            Poly f = build_by_recurrence(FamilyTag::Ak, n, k);
            CHECK(positivity_report(f, f.degree_in("x")).bi_gamma_positive);
        }
}

TEST_CASE("alternating increase matches unimodality of both parts") {
    // polynomials with deg f = deg a = n and deg b = n - 1
    auto check_equiv = [](const Poly& f, int n) {
        auto d = symmetric_decompose(f, n);
        if (d.a.degree_in("x") != n || d.b.degree_in("x") != n - 1) return;
        auto ra = positivity_report(d.a, n);
        auto rb = positivity_report(d.b, n - 1);
        auto rf = positivity_report(f, n);
        CHECK(rf.alternatingly_increasing == (ra.unimodal && rb.unimodal));
    };
    for (int n = 1; n <= 7; ++n) {
        check_equiv(build_by_recurrence(FamilyTag::M, n), n - 1);
        check_equiv(build_by_recurrence(FamilyTag::B, n), n);
        for (int k = 1; k <= 3; ++k) check_equiv(build_by_recurrence(FamilyTag::Ak, n, k), n - 1);
    }
}

TEST_CASE("partial gamma table") {
    auto t1 = partial_gamma(1, {});
    REQUIRE(t1.size() == 1);
    CHECK(table_get(t1, 1, 0) == Poly(1L));
    CHECK(partial_gamma_reconstruct(t1, 1, {}) == parse_poly("1+k*x"));

    auto t2 = partial_gamma(2, {});
    CHECK(table_get(t2, 2, 0) == Poly(1L));
    CHECK(table_get(t2, 0, 1) == parse_poly("k+k^2"));

    auto t3 = partial_gamma(3, {});
    CHECK(partial_gamma_reconstruct(t3, 3, {}) ==
          parse_poly("(1+k*x)^3 + 3*(k+k^2)*(1+k*x)*x + k*(k+k^2)*x*(1+x)"));

    for (int n = 1; n <= 8; ++n)
        CHECK(partial_gamma_reconstruct(partial_gamma(n, {}), n, {}) ==
              build_by_recurrence(FamilyTag::Ak, n + 1, {}));
}

TEST_CASE("gamma entries have nonnegative integer coefficients") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& [ij, g] : partial_gamma(n, {})) {
            for (const auto& [m, c] : g.terms()) {
                CHECK(c >= 0);
                CHECK(c.get_den() == 1);
            }
        }
    }
}

TEST_CASE("doubled zeta entries equal gamma at k=2") {
    for (int n = 1; n <= 6; ++n) {
        auto gam = partial_gamma(n, 2);
        auto zet = zeta_table(n);
        CHECK(gam.size() == zet.size());
        for (const auto& [ij, z] : zet)
            CHECK(table_get(gam, ij.first, ij.second) == z * Rat(Int(1) << ij.second));
    }
}
