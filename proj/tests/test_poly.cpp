#include "stirlab/grammar.hpp"
#include "stirlab/poly.hpp"

#include <doctest.h>

#include <random>

using namespace stirlab;

namespace {

// random polynomials over {x, y, z} with small integer coefficients
Poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    Poly p;
    const char* vars[3] = {"x", "y", "z"};
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m = Monomial::of({{vars[0], expo(rng)}, {vars[1], expo(rng)}, {vars[2], expo(rng)}});
        p.add_term(m, Rat(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic examples") {
    CHECK(parse_poly("1+2*x") * parse_poly("1+x") == parse_poly("1+3*x+2*x^2"));
    CHECK((parse_poly("x+y") - parse_poly("x+y")).is_zero());
    // M_1 = 1 times (1+2x)
    CHECK(Poly(1L) * parse_poly("1+2*x") == parse_poly("1+2*x"));
}

TEST_CASE("pow examples") {
    CHECK(parse_poly("1+x").pow(2) == parse_poly("1+2*x+x^2"));
    CHECK(parse_poly("alpha*x+beta*y").pow(2) ==
          parse_poly("alpha^2*x^2 + 2*alpha*beta*x*y + beta^2*y^2"));
    CHECK(parse_poly("7*x*y - 3").pow(0) == Poly(1L));
}

TEST_CASE("partial derivative examples") {
    CHECK(parse_poly("1+10*x+4*x^2").derivative("x") == parse_poly("10+8*x"));
    CHECK(parse_poly("y^2").derivative("x").is_zero());
    CHECK(parse_poly("x^3").derivative("x") == parse_poly("3*x^2"));
}

TEST_CASE("substitute examples") {
    CHECK(parse_poly("a*b^2 + a^2*b").substitute({{"a", Poly::var("x")}, {"b", Poly(1L)}}) ==
          parse_poly("x + x^2"));
    CHECK(parse_poly("p*x2 + q*y2").substitute({{"p", Poly(1L)},
                                                {"q", Poly(1L)},
                                                {"x2", Poly::var("x")},
                                                {"y2", Poly::var("x")}}) == parse_poly("2*x"));
    CHECK(Poly::var("x").substitute({}) == Poly::var("x"));
}

TEST_CASE("reverse_in examples") {
    CHECK(parse_poly("1+10*x+4*x^2").reverse_in("x", 3) == parse_poly("x^3+10*x^2+4*x"));
    Poly pal = parse_poly("1+3*x+3*x^2+x^3");
    CHECK(pal.reverse_in("x", 3) == pal);
    CHECK(parse_poly("1+2*x").reverse_in("x", 2) == parse_poly("x^2+2*x"));
    CHECK_THROWS_AS(parse_poly("x^3").reverse_in("x", 2), const Error&);
}

TEST_CASE("coeff_of examples") {
    Poly m3q = parse_poly("q^3+4*q*x+6*q^2*x+4*q*x^2");
    CHECK(m3q.coeff_of("x", 1) == parse_poly("4*q+6*q^2"));
    CHECK(parse_poly("1+y").coeff_of("v", 2).is_zero());
    CHECK(parse_poly("1+k*x").coeff_of("x", 1) == Poly::var("k"));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).derivative("x") == a.derivative("x") * b + a * b.derivative("x"));
    }
}

TEST_CASE("reverse_in is an involution") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_poly(rng);
        int n = a.degree_in("x") + (trial % 3);
        CHECK(a.reverse_in("x", n).reverse_in("x", n) == a);
    }
}

TEST_CASE("substitution composes for disjoint variable sets") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(rng);
        // x -> u + 1 with u fresh, then u -> 2; vs direct x -> 3
        Poly step1 = a.substitute({{"x", Poly::var("u") + Poly(1L)}});
        Poly step2 = step1.substitute({{"u", Poly(2L)}});
        CHECK(step2 == a.substitute({{"x", Poly(3L)}}));
    }
}

TEST_CASE("coefficient extraction partitions the polynomial") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(rng);
        Poly rebuilt;
        for (int e = 0; e <= a.degree_in("y"); ++e)
            rebuilt += a.coeff_of("y", e) * Poly::term(Rat(1), Monomial::var("y", e));
        CHECK(rebuilt == a);
    }
}

TEST_CASE("canonical text form") {
    CHECK(parse_poly("4*x + x^3 + 10*x^2").to_string() == "4*x + 10*x^2 + x^3");
    CHECK(Poly().to_string() == "0");
    CHECK(parse_poly("-x + 1").to_string() == "1 - x");
    CHECK((Poly::var("x") * Rat(Int(1), Int(2))).to_string() == "1/2*x");
    CHECK(parse_poly("a^2*b + a*b^2").to_string() == "a*b^2 + a^2*b");
    CHECK(Poly(-7L).to_string() == "-7");
}
