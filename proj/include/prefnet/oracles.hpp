/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <stdexcept>

#include "prefnet/core.hpp"

namespace prefnet {

// Exhaustive reference implementations of the definitions. They share no
// shortcut with the fast paths they validate, and they refuse oversized
// inputs instead of running unbounded.

struct OracleBudget {
  int max_n = 8;
  std::uint64_t max_subsets = 1'000'000;
};

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Group preference by full bijection enumeration: true iff some pairing of
// gp against g beats it position by position.
bool brute_group_prefers(const TotalOrder& order, const IndividualSet& gp,
                         const IndividualSet& g, const OracleBudget& budget = {});

// No equal-sized subset of the complement is group-preferred to s by every
// member of s.
bool brute_self_approving(const PreferenceNetwork& net, const IndividualSet& s,
                          const OracleBudget& budget = {});

// No non-empty proper subset G of s has an equal-sized replacement outside s
// that every member of s - G group-prefers to G.
bool brute_group_stable(const PreferenceNetwork& net, const IndividualSet& s,
                        const OracleBudget& budget = {});

// For every non-empty proper subset G of s, some member of s - G does not
// weakly prefer the complement of s to G. Weak preference is evaluated on
// the oracle route: top-k selection followed by bijection enumeration.
bool brute_strongly_group_stable(const PreferenceNetwork& net,
                                 const IndividualSet& s,
                                 const OracleBudget& budget = {});

// Clique family by scanning all 2^n - 1 non-empty subsets against the
// definition.
CommunitySet brute_cliques(const PreferenceNetwork& net,
                           const OracleBudget& budget = {});

}  // namespace prefnet
