/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <functional>

#include "prefnet/core.hpp"

namespace prefnet {

// Majority threshold used by the harmon membership test: strict needs
// count*2 > voters, weak needs count*2 >= voters.
enum class MajorityRule { strict, weak };

bool majority_holds(int count, int voters, MajorityRule rule);

// Rank-window slack for clique-with-slack membership: maps a set size to a
// non-negative allowance added on top of it.
using SlackFn = std::function<int(int)>;

// The cliques of a network. Any two are nested or disjoint, and there are
// at most 2n-1 of them.
struct CliqueFamily {
  CommunitySet cliques;
};

// True iff every member of s ranks exactly s as their top |s| individuals.
bool is_clique(const PreferenceNetwork& net, const IndividualSet& s);

// All cliques of the network. Every clique is a rank prefix of each of its
// members' orders, so the n^2 per-individual prefixes are the only
// candidates; each is verified against the definition.
CliqueFamily enumerate_cliques(const PreferenceNetwork& net);

// True iff every member of s ranks every member of s within |s| + g(|s|).
// With g == 0 this coincides with is_clique.
bool is_clique_g(const PreferenceNetwork& net, const IndividualSet& s,
                 const SlackFn& g);

// True iff for every member u and outsider v, at least a lambda fraction of
// the |s| member orders prefer u to v. lambda must lie in [0, 1].
bool is_harmonious(const PreferenceNetwork& net, const IndividualSet& s,
                   double lambda);

// True iff for every member u and outsider v, the members of s - {u} that
// prefer u to v form a majority of s - {u} under the given rule. A singleton
// with outsiders present fails under strict (no voter clears 2*0 > 0) and
// passes under weak.
bool is_harmon(const PreferenceNetwork& net, const IndividualSet& s,
               MajorityRule rule);

}  // namespace prefnet
