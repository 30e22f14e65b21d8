#include "stirlab/grammar.hpp"

#include <doctest.h>

#include <random>

using namespace stirlab;

TEST_CASE("parse_grammar accepts the standard rule sets") {
    Grammar g = parse_grammar("a -> a*b\nb -> a*b\n");
    CHECK(g.rules.size() == 2);
    CHECK(g.rules.at("a") == parse_poly("a*b"));

    Grammar g1 = parse_grammar("I -> I*p*q\np -> x*y\nx -> x*y\ny -> x*y\n");
    CHECK(g1.rules.size() == 4);
    CHECK(g1.rules.at("I") == parse_poly("I*p*q"));

    Grammar withcomment = parse_grammar("# Eulerian rules\na -> a*b\n\nb -> a*b # same\n");
    CHECK(withcomment.rules == g.rules);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_grammar("a -> a*");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 7);
    }
    try {
        parse_grammar("a -> a*b\na -> b\n");
        FAIL("expected a duplicate-rule error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_grammar("-> a*b"), const ParseError&);
    CHECK_THROWS_AS(parse_grammar("a -> (a*b"), const ParseError&);
    CHECK_THROWS_AS(parse_poly("2*"), const ParseError&);
    CHECK_THROWS_AS(parse_poly("x^y"), const ParseError&);
}

TEST_CASE("rational and signed literals") {
    CHECK(parse_poly("1/2*x - 1/3") == Poly::var("x") * Rat(Int(1), Int(2)) - Poly(Rat(Int(1), Int(3))));
    CHECK(parse_poly("-2*x^2") == Poly::var("x").pow(2) * Rat(-2));
    CHECK(parse_poly("(1+x)^3") == (Poly(1L) + Poly::var("x")).pow(3));
}

TEST_CASE("derive follows the rules") {
    Grammar dumont = parse_grammar("a -> a*b\nb -> a*b\n");
    CHECK(derive(dumont, Poly::var("a")) == parse_poly("a*b"));
    CHECK(derive(dumont, parse_poly("a*b")) == parse_poly("a*b^2 + a^2*b"));
    CHECK(derive(dumont, Poly::var("v")).is_zero()); // letters without rules are constants
}

TEST_CASE("derive_n iterates") {
    Grammar g = parse_grammar("a -> a*b^2\nb -> a^2*b\n");
    CHECK(derive_n(g, Poly::var("a"), 2) == parse_poly("a*b^4 + 2*a^3*b^2"));

    Grammar g1 = parse_grammar("I -> I*p*q\np -> x*y\nx -> x*y\ny -> x*y\n");
    Poly d2 = derive_then_substitute(g1, Poly::var("I"), 2, {{"y", Poly(1L)}});
    CHECK(d2 == parse_poly("I*p^2*q^2 + I*q*x"));

    CHECK(derive_n(g1, parse_poly("x+7*p"), 0) == parse_poly("x+7*p"));
}

TEST_CASE("derive_then_substitute reproduces small displayed values") {
    Grammar ji = parse_grammar("a -> a*alpha*x\nb -> b*beta*y\nx -> x*y\ny -> x*y\n");
    CHECK(derive_then_substitute(ji, parse_poly("a*b"), 1, {{"a", Poly(1L)}, {"b", Poly(1L)}}) ==
          parse_poly("alpha*x + beta*y"));

    Grammar lapap = parse_grammar("I -> J*z\nJ -> J*z^2 + I*x*z\nx -> 2*x*z^2\nz -> x*z\n");
    CHECK(derive_then_substitute(lapap, Poly::var("I"), 2,
                                 {{"I", Poly(1L)},
                                  {"J", Poly::var("x")},
                                  {"x", parse_poly("x*y")},
                                  {"z", Poly(1L)}}) == parse_poly("x + x*y + x^2*y"));

    Grammar q2 = parse_grammar("I -> q*I*y^2\nx -> 2*x*y^2\ny -> x*y\n");
    CHECK(derive_then_substitute(q2, Poly::var("I"), 2, {{"I", Poly(1L)}, {"y", Poly(1L)}}) ==
          parse_poly("q^2 + 2*q*x"));
}

TEST_CASE("Leibniz law for the formal derivative") {
    Grammar g = parse_grammar("x -> x*y\ny -> 2*x + z\nz -> z^2\n");
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(-5, 5), expo(0, 2), nterms(0, 3);
    auto random_poly = [&]() {
        Poly p;
        const char* vars[3] = {"x", "y", "z"};
        for (int t = nterms(rng); t > 0; --t)
            p.add_term(Monomial::of({{vars[0], expo(rng)}, {vars[1], expo(rng)}, {vars[2], expo(rng)}}),
                       Rat(coeff(rng)));
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(), b = random_poly();
        CHECK(derive(g, a * b) == derive(g, a) * b + a * derive(g, b));
    }
}

TEST_CASE("Eulerian rule set is symmetric in its letters") {
    Grammar dumont = parse_grammar("a -> a*b\nb -> a*b\n");
    for (int n = 1; n <= 8; ++n)
        CHECK(derive_n(dumont, Poly::var("a"), n) == derive_n(dumont, Poly::var("b"), n));
}

TEST_CASE("alias verification") {
    // base rules with symbolic weight k; aliases I = a*beta, u = alpha*beta,
    // v = alpha + beta, w = beta + k*alpha
    Grammar base = parse_grammar(
        "a -> a*beta\nb -> alpha*b\nalpha -> k*alpha*beta\nbeta -> k*alpha*beta\n");
    Grammar alias = parse_grammar("I -> I*w\nw -> (k+k^2)*u\nu -> k*u*v\nv -> 2*k*u\n");
    std::map<VarName, Poly> defs = {{"I", parse_poly("a*beta")},
                                    {"u", parse_poly("alpha*beta")},
                                    {"v", parse_poly("alpha+beta")},
                                    {"w", parse_poly("beta+k*alpha")}};
    CHECK(verify_alias(base, alias, defs));

    // the plateau-pair change of letters
    Grammar lapap = parse_grammar("I -> J*z\nJ -> J*z^2 + I*x*z\nx -> 2*x*z^2\nz -> x*z\n");
    Grammar uv = parse_grammar("u -> 2*u*v\nv -> 4*u\n");
    CHECK(verify_alias(lapap, uv, {{"u", parse_poly("x*z^2")}, {"v", parse_poly("x+z^2")}}));

    // the q-marked change of letters
    Grammar q2 = parse_grammar("I -> q*I*y^2\nx -> 2*x*y^2\ny -> x*y\n");
    Grammar h = parse_grammar("A -> A*(q*v+(2-q)*x)\nx -> 2*u\nu -> 2*u*v\nv -> 4*u\n");
    CHECK(verify_alias(q2, h, {{"A", parse_poly("I*y^2")},
                               {"u", parse_poly("x*y^2")},
                               {"v", parse_poly("x+y^2")}}));

    // and a wrong alias is rejected
    Grammar bad = parse_grammar("u -> 3*u*v\nv -> 4*u\n");
    CHECK_FALSE(verify_alias(lapap, bad, {{"u", parse_poly("x*z^2")}, {"v", parse_poly("x+z^2")}}));
}
