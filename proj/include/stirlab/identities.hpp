#pragma once

/*
 * Registry of equidistribution and decomposition identities, each checked by
 * computing both sides through disjoint code paths (enumeration vs recurrence
 * vs grammar, or distinct statistic sets) up to a size bound.  Comparisons
 * are exact and term-by-term except xu01-sample, where the nonlinear
 * variable coupling forces rational-point sampling; its report says so.
 */

#include "stirlab/poly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stirlab {

struct IdentityReport {
    std::string id;
    int bound = 0;
    bool pass = false;
    std::string counterexample; // nonempty iff !pass
    double seconds = 0.0;
    bool sampling = false; // true for checks that sample rational points
    std::string note;
};

struct IdentityCheck {
    std::string id;
    std::string summary;
    int default_bound;
    std::function<IdentityReport(int bound)> run;
};

const std::vector<IdentityCheck>& identity_registry();

IdentityReport run_identity(const std::string& id, std::optional<int> bound = {});

/// Runs every registered identity; jobs > 1 executes checkers concurrently.
/// Reports come back sorted by id regardless of execution order.
std::vector<IdentityReport> run_all(const std::map<std::string, int>& bound_overrides = {},
                                    int jobs = 1);

} // namespace stirlab
