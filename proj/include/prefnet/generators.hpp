/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <random>

#include "prefnet/core.hpp"

namespace prefnet {

// Uniform draw from [0, bound) by rejection, so results depend only on the
// mt19937_64 stream and are identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates permutation of {0..n-1} driven by bounded().
std::vector<Individual> random_permutation(std::mt19937_64& rng, int n);

// Divide-and-conquer profile with many nested cliques: the population is
// split into two sigma-ordered halves (first half gets the extra individual
// when n is odd), each half recurses, and every individual's order is their
// half's recursive order followed by the other half in sigma order.
PreferenceNetwork get_profile(int n);
PreferenceNetwork get_profile(int n, const OrderList& sigma);

// 2m individuals: m heroes (ids 0..m-1) and m sidekicks (ids m..2m-1).
// Hero i and sidekick i share the order: hero i first, the remaining heroes
// ascending, then sidekick i, then the remaining sidekicks ascending. Every
// union of all heroes with any sidekick subset is strongly group-stable, so
// the network has at least 2^m scomp communities.
PreferenceNetwork hero_sidekick(int m);

// Every individual's order drawn independently and uniformly; deterministic
// per seed.
PreferenceNetwork uniform_random(int n, std::uint64_t seed);

}  // namespace prefnet
