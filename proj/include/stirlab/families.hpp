#pragma once

/*
 * Polynomial families built by up to three independent routes: exhaustive
 * enumeration over the relevant object set, iteration of the defining
 * recurrence, and grammar derivation with the lemma's substitution.
 * Agreement of the routes is checked by the identity suite; the builders
 * themselves never share intermediate results across routes.
 *
 * Variable conventions: x, y always denote the main statistics; p, q the
 * fixed-point/cycle markers; alpha, beta the min/max markers; k stays
 * symbolic when no concrete value is supplied (families Ak, GammaK).
 */

#include "stirlab/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace stirlab {

enum class FamilyTag { A, B, M, N, Ak, PQ, AlphaBeta, Pxy, Mq, GammaK, ZetaK2, XiEta, FG, ABdecomp, Fn, Ank };

std::optional<FamilyTag> family_from_string(const std::string& name);
std::string family_name(FamilyTag tag);
bool family_is_table(FamilyTag tag);

enum class Route { enumeration, recurrence, grammar };
std::optional<Route> route_from_string(const std::string& name);

bool has_route(FamilyTag tag, Route route, bool symbolic_k);

Poly build_by_enumeration(FamilyTag tag, int n, std::optional<int> k = {});
Poly build_by_recurrence(FamilyTag tag, int n, std::optional<int> k = {});
Poly build_by_grammar(FamilyTag tag, int n, std::optional<int> k = {});
Poly build(FamilyTag tag, Route route, int n, std::optional<int> k = {});

/// Coefficient arrays defined by recurrences.  `primary` holds the main
/// entries indexed by (i, j) (j = 0 for one-dimensional tables), `secondary`
/// the companion array (eta, g, b) when the family defines one.  Reads of
/// absent indices mean zero.
struct CoeffTables {
    std::map<std::pair<int, int>, Poly> primary;
    std::map<std::pair<int, int>, Poly> secondary;
};

CoeffTables coeff_table(FamilyTag tag, int n, std::optional<int> k = {});

Poly table_get(const std::map<std::pair<int, int>, Poly>& t, int i, int j = 0);

// Shared building blocks -----------------------------------------------------

/// (p,q)-Eulerian polynomial in x, y, p, q by its recurrence.
Poly pq_polynomial_recurrence(int n);

/// Map every p^f q^c term (f <= c required) to P^f Q^(c-f); realizes the
/// parametrizations with numerator alpha*x + beta*y without ever forming a
/// quotient.
Poly transform_pq(const Poly& pq, const VarName& pvar, const VarName& qvar,
                  const Poly& P, const Poly& Q);

/// xi/eta rows at level n (index -> integer entries as Poly).
std::pair<std::vector<Poly>, std::vector<Poly>> xi_eta_rows(int n);
/// f/g rows at level n (polynomials in q).
std::pair<std::vector<Poly>, std::vector<Poly>> fg_rows(int n);
/// Symmetric-decomposition pair (a_n, b_n) for the ascent-plateau polynomial.
std::pair<Poly, Poly> ab_decomp_pair(int n);
/// gamma-basis coefficients a(n, k), index k = 1..floor((n+1)/2).
std::vector<Poly> ank_row(int n);

/// P_{n+1}(x, y) reconstructed from the xi/eta rows.
Poly pxy_from_xi_eta(int n);
/// M_n(x, q) reconstructed from the f/g rows.
Poly mq_from_fg(int n);

/// In-grammar form of the k-Stirling rules {a -> a b^k, b -> a^k b}.
Poly ank_from_grammar(int n, int k);

} // namespace stirlab
