#pragma once

/*
 * Exact multivariate polynomial ring over arbitrary-precision rationals.
 *
 * A Monomial maps variable names to positive exponents, a Poly maps
 * monomials to nonzero rational coefficients.  Terms are kept in graded
 * lexicographic order (total degree first, then the sorted name/exponent
 * sequence), which makes printed output and golden files deterministic.
 * Variables are created on first use; there is no fixed alphabet.
 *
 * All operations are pure and exact; no floating point anywhere.
 */

#include "stirlab/rational.hpp"

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stirlab {

using VarName = std::string;

class Monomial {
public:
    Monomial() = default;

    static Monomial var(const VarName& v, int exp = 1);
    static Monomial of(std::initializer_list<std::pair<VarName, int>> vs);

    int degree() const;
    int exponent(const VarName& v) const;
    bool empty() const { return exps_.empty(); }
    const std::map<VarName, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    /// Copy with the exponent of v replaced (0 removes the variable).
    Monomial with_exponent(const VarName& v, int e) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator<(const Monomial& o) const;

    std::string to_string() const;

private:
    std::map<VarName, int> exps_; // no zero exponents stored
};

class Poly {
public:
    Poly() = default; // zero
    Poly(long v);
    Poly(const Int& v);
    Poly(const Rat& v);

    static Poly var(const VarName& v);
    static Poly term(const Rat& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero included); throws otherwise.
    Rat constant_value() const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    std::set<VarName> vars() const;
    int total_degree() const; // 0 for the zero polynomial
    int degree_in(const VarName& v) const;

    /// Accumulate c * m into this polynomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;
    Poly derivative(const VarName& v) const;
    /// Simultaneous substitution; unbound variables are left alone.
    Poly substitute(const std::map<VarName, Poly>& bindings) const;
    /// v^n * p(v -> 1/v); requires degree_in(v) <= n.
    Poly reverse_in(const VarName& v, int n) const;
    /// Coefficient of v^e, a polynomial in the remaining variables.
    Poly coeff_of(const VarName& v, int e) const;
    /// Coefficients of v^0..v^deg as polynomials in the other variables.
    std::vector<Poly> coeff_list(const VarName& v) const;
    /// Drop every term whose degree in v exceeds bound.
    Poly truncate_in(const VarName& v, int bound) const;

    std::string to_string() const;

private:
    std::map<Monomial, Rat> terms_; // no zero coefficients stored
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

} // namespace stirlab
