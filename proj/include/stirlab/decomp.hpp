#pragma once

/*
 * Symmetric decompositions, gamma expansions, positivity predicates and the
 * partial-gamma table of the 1/k-Eulerian polynomials.
 *
 * The partial-gamma basis {(1+kx)^i x^j (1+x)^(n-i-2j)} is linearly
 * dependent, so the table entries are *defined* by their recurrence and only
 * *verified* by reconstruction; they are never extracted by a linear solve.
 */

#include "stirlab/poly.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace stirlab {

struct SymmetricDecomposition {
    Poly a; // symmetric with center n/2
    Poly b; // symmetric with center (n-1)/2
    int n;  // reference degree
};

/// f = a + x b with both parts symmetric; requires deg f <= n, divisions by
/// (1 - x) are checked exact.
SymmetricDecomposition symmetric_decompose(const Poly& f, int n, const VarName& var = "x");

/// True when coeff(v^i) == coeff(v^(n-i)) for all i (coefficients may be
/// polynomials in other variables).
bool is_palindromic(const Poly& f, int n, const VarName& var = "x");

/// Unique expansion of a center-n/2 symmetric polynomial in the basis
/// x^k (1+x)^(n-2k); throws if f is not symmetric.
std::vector<Poly> gamma_expand(const Poly& f, int n, const VarName& var = "x");

Poly gamma_reconstruct(const std::vector<Poly>& gammas, int n, const VarName& var = "x");

struct PositivityReport {
    bool symmetric = false;
    bool unimodal = false;
    bool gamma_positive = false;
    bool alternatingly_increasing = false;
    bool bi_gamma_positive = false;
};

/// Predicates from the definitions; refuses polynomials whose coefficients
/// are not plain rationals (substitute parameter values first).
PositivityReport positivity_report(const Poly& f, int n, const VarName& var = "x");

/// Entries gamma_{n,i,j}(k); polynomials in the symbolic variable k when no
/// concrete k is supplied.  Absent indices are zero.
using PartialGammaTable = std::map<std::pair<int, int>, Poly>;
PartialGammaTable partial_gamma(int n, std::optional<int> k = {});

/// sum_i (1+kx)^i sum_j gamma_{n,i,j} x^j (1+x)^(n-i-2j); equals the
/// (n+1)-st 1/k-Eulerian polynomial.
Poly partial_gamma_reconstruct(const PartialGammaTable& table, int n, std::optional<int> k = {});

/// Companion integer table: 2^j zeta_{n,i,j} = gamma_{n,i,j}(2).
PartialGammaTable zeta_table(int n);

} // namespace stirlab
