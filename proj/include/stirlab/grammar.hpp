#pragma once

/*
 * Context-free grammar formal derivative.  A Grammar is a set of
 * substitution rules letter -> polynomial; the derivative D_G acts on a
 * polynomial by the Leibniz rule, with letters lacking a rule treated as
 * constants.  Rule sets are written in a one-rule-per-line DSL:
 *
 *     # Eulerian rules
 *     a -> a*b
 *     b -> a*b
 *
 * Coefficients may be integers or rationals (2, -3, 1/2); products use '*',
 * powers '^', and parentheses group subexpressions.
 */

#include "stirlab/poly.hpp"

#include <map>
#include <string>

namespace stirlab {

struct Grammar {
    std::map<VarName, Poly> rules;
};

/// Parse a full rule set; rejects duplicate left-hand sides and reports
/// syntax errors with line and column.
Grammar parse_grammar(const std::string& src);

/// Parse a single polynomial expression (used by the DSL, tests and CLI).
Poly parse_poly(const std::string& src);

Grammar load_grammar_file(const std::string& path);

/// One derivative step: sum over ruled letters of d(p)/dv * rule(v).
Poly derive(const Grammar& g, const Poly& p);

Poly derive_n(const Grammar& g, const Poly& p, int n);

Poly derive_then_substitute(const Grammar& g, const Poly& p, int n,
                            const std::map<VarName, Poly>& bindings);

/// Checks that an alias grammar is consistent with a base grammar: for every
/// alias rule L -> R, deriving the definition of L in the base grammar must
/// equal R with all alias letters expanded.  Letters without a definition
/// stand for themselves.
bool verify_alias(const Grammar& base, const Grammar& alias,
                  const std::map<VarName, Poly>& definitions);

} // namespace stirlab
