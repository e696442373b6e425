/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>

#include "prefnet/community.hpp"
#include "prefnet/core.hpp"

namespace prefnet {

// Where each grown community came from: the clique it was seeded with and
// the individuals appended to it, in order. Cliques have an empty chain.
struct GrowProvenance {
  IndividualSet origin_clique;
  std::vector<Individual> chain;
};

// Communities in discovery order with parallel provenance. Every clique of
// the network appears, and replaying any chain stays inside the harmon
// membership test step by step.
struct GrowResult {
  std::vector<IndividualSet> communities;
  std::vector<GrowProvenance> provenance;
};

struct GrowOptions {
  // Process the worklist back-to-front instead of front-to-back. The final
  // community set is identical either way; only discovery order changes.
  bool lifo = false;
  // Throw std::logic_error if some processed set accepts more than one
  // extension. That can only happen under the weak rule (two candidates can
  // tie on an even voter count); under strict at most one candidate wins.
  bool assert_unique_extension = false;
};

// Worklist fixed point seeded with all cliques: each popped set S is kept
// and every S + {u} passing the harmon test is enqueued. Re-derived sets are
// dropped, so no set is processed twice.
GrowResult clique_growing(const PreferenceNetwork& net, MajorityRule rule,
                          const GrowOptions& options = {});

// The grown communities that are also in scomp.
CommunitySet grow_scomp(const PreferenceNetwork& net, MajorityRule rule);

// grow_scomp in canonical order (size, then lexicographic members).
std::vector<IndividualSet> enumerate_communities(const PreferenceNetwork& net,
                                                 MajorityRule rule);

// Uniform draw from enumerate_communities; deterministic per seed.
IndividualSet sample_uniform(const PreferenceNetwork& net, MajorityRule rule,
                             std::uint64_t seed);

}  // namespace prefnet
