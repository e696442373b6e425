/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <random>

#include "prefnet/core.hpp"

namespace prefnet {

// Failure evidence for the strong group stability check: starting from seed,
// the grown set stuck could not be extended, i.e. every member of s - stuck
// weakly prefers the complement of s to stuck.
struct SgsWitness {
  Individual seed;
  IndividualSet stuck;
};

struct SgsTrace {
  bool outcome = false;
  std::optional<SgsWitness> witness;
};

// Decides strong group stability of s in O(|s|^4): for each seed u in s,
// grows U from {u} by repeatedly adding a member of s - U that does not
// weakly prefer the complement of s to U. If some U < s cannot be extended,
// s is not strongly group-stable. Ties are broken by lowest index; the
// outcome is independent of that choice.
SgsTrace is_strongly_group_stable(const PreferenceNetwork& net,
                                  const IndividualSet& s);

// Same decision with the tie at the "choose any eligible member" step
// resolved uniformly at random. Used to exercise choice-independence.
SgsTrace is_strongly_group_stable_randomized(const PreferenceNetwork& net,
                                             const IndividualSet& s,
                                             std::mt19937_64& rng);

// Degenerate self-approval: a singleton {u} passes iff u ranks itself
// first; larger sets pass unconditionally.
bool is_sa_prime(const PreferenceNetwork& net, const IndividualSet& s);

// Membership in the top of the community-function lattice: strongly
// group-stable and sa-prime.
bool in_scomp(const PreferenceNetwork& net, const IndividualSet& s);

}  // namespace prefnet
