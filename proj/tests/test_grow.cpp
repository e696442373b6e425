/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include <doctest.h>

#include <deque>
#include <random>

#include "prefnet/generators.hpp"
#include "prefnet/grow.hpp"
#include "prefnet/oracles.hpp"
#include "prefnet/stability.hpp"
#include "support.hpp"

using namespace prefnet;
using testsupport::overlap5;
using testsupport::set1;
using testsupport::village6;

namespace {

// Reference growing loop built directly on the harmon membership test,
// sharing nothing with the incremental counter inside clique_growing.
CommunitySet reference_grow(const PreferenceNetwork& net, MajorityRule rule) {
  CommunitySet seen;
  std::deque<IndividualSet> queue;
  for (const IndividualSet& clique : enumerate_cliques(net).cliques) {
    seen.insert(clique);
    queue.push_back(clique);
  }
  while (!queue.empty()) {
    const IndividualSet current = queue.front();
    queue.pop_front();
    for (Individual u = 0; u < net.size(); ++u) {
      if (current.contains(u)) continue;
      const IndividualSet extended = current.with(u);
      if (is_harmon(net, extended, rule) && seen.insert(extended)) {
        queue.push_back(extended);
      }
    }
  }
  return seen;
}

CommunitySet as_set(const GrowResult& result) {
  CommunitySet out;
  for (const IndividualSet& s : result.communities) out.insert(s);
  return out;
}

}  // namespace

TEST_CASE("growing on the village network") {
  const PreferenceNetwork net = village6();
  const CommunitySet grown = as_set(clique_growing(net, MajorityRule::strict));
  CHECK(grown.contains(set1({1, 2, 3})));
  CHECK(grown.contains(set1({4, 5, 6})));
  CHECK(grown.contains(IndividualSet::full(6)));
  CHECK(grown.contains(set1({1, 2, 3, 4})));
  CHECK(grown.size() == 9);  // the 7 cliques plus {1,2,3,4} and {1,4,5,6}
  CHECK(grown.contains(set1({1, 4, 5, 6})));

  const CommunitySet stable = grow_scomp(net, MajorityRule::strict);
  CHECK(!stable.contains(set1({1, 2, 3, 4})));
  CHECK(!stable.contains(set1({1, 4, 5, 6})));
  CHECK(stable.contains(set1({1, 2, 3})));
  CHECK(stable.contains(set1({4, 5, 6})));
  CHECK(stable.contains(IndividualSet::full(6)));
  CHECK(stable.size() == 7);

  // Each surviving community passes the definition-level oracle too.
  for (const IndividualSet& s : stable) {
    CHECK(brute_strongly_group_stable(net, s));
  }
}

TEST_CASE("single individual") {
  const PreferenceNetwork net = uniform_random(1, 5);
  const GrowResult result = clique_growing(net, MajorityRule::strict);
  CHECK(result.communities == std::vector<IndividualSet>{IndividualSet{0}});
  CHECK(grow_scomp(net, MajorityRule::strict).items() ==
        std::vector<IndividualSet>{IndividualSet{0}});
}

TEST_CASE("overlapping communities appear under the weak rule") {
  const PreferenceNetwork net = overlap5();
  const CommunitySet weak = grow_scomp(net, MajorityRule::weak);
  CHECK(weak.contains(set1({1, 2, 3})));
  CHECK(weak.contains(set1({1, 3, 4})));

  // Under the strict rule neither three-member community is reachable.
  const CommunitySet strict = grow_scomp(net, MajorityRule::strict);
  CHECK(!strict.contains(set1({1, 2, 3})));
  CHECK(!strict.contains(set1({1, 3, 4})));
}

TEST_CASE("growing matches the reference loop") {
  std::mt19937_64 rng(404);
  std::vector<PreferenceNetwork> nets = {village6(), overlap5(), hero_sidekick(3),
                                         get_profile(9)};
  for (int trial = 0; trial < 30; ++trial) {
    nets.push_back(uniform_random(1 + static_cast<int>(bounded(rng, 7)), rng()));
  }
  for (const PreferenceNetwork& net : nets) {
    for (const MajorityRule rule : {MajorityRule::strict, MajorityRule::weak}) {
      CHECK(as_set(clique_growing(net, rule)) == reference_grow(net, rule));
    }
  }
}

TEST_CASE("worklist order does not change the result") {
  std::mt19937_64 rng(73);
  std::vector<PreferenceNetwork> nets = {village6(), overlap5(), get_profile(12)};
  for (int trial = 0; trial < 20; ++trial) {
    nets.push_back(uniform_random(1 + static_cast<int>(bounded(rng, 6)), rng()));
  }
  GrowOptions lifo;
  lifo.lifo = true;
  for (const PreferenceNetwork& net : nets) {
    for (const MajorityRule rule : {MajorityRule::strict, MajorityRule::weak}) {
      CHECK(as_set(clique_growing(net, rule)) == as_set(clique_growing(net, rule, lifo)));
    }
  }
}

TEST_CASE("provenance chains replay") {
  std::mt19937_64 rng(55);
  std::vector<PreferenceNetwork> nets = {village6(), overlap5(), hero_sidekick(3)};
  for (int trial = 0; trial < 15; ++trial) {
    nets.push_back(uniform_random(2 + static_cast<int>(bounded(rng, 5)), rng()));
  }
  for (const PreferenceNetwork& net : nets) {
    for (const MajorityRule rule : {MajorityRule::strict, MajorityRule::weak}) {
      const GrowResult result = clique_growing(net, rule);
      const CommunitySet cliques = enumerate_cliques(net).cliques;
      REQUIRE(result.communities.size() == result.provenance.size());
      for (std::size_t i = 0; i < result.communities.size(); ++i) {
        const GrowProvenance& p = result.provenance[i];
        CHECK(cliques.contains(p.origin_clique));
        IndividualSet step = p.origin_clique;
        for (Individual u : p.chain) {
          step = step.with(u);
          CHECK(is_harmon(net, step, rule));
        }
        CHECK(step == result.communities[i]);
      }
    }
  }
}

TEST_CASE("at most one extension under the strict rule") {
  std::mt19937_64 rng(606);
  GrowOptions scan;
  scan.assert_unique_extension = true;
  std::vector<PreferenceNetwork> nets = {village6(), overlap5(), hero_sidekick(4),
                                         get_profile(16)};
  for (int trial = 0; trial < 40; ++trial) {
    nets.push_back(uniform_random(1 + static_cast<int>(bounded(rng, 7)), rng()));
  }
  for (const PreferenceNetwork& net : nets) {
    CHECK_NOTHROW((void)clique_growing(net, MajorityRule::strict, scan));
  }
}

TEST_CASE("two extensions can tie under the weak rule") {
  // Voters split one against one, so both candidates clear a weak majority.
  const PreferenceNetwork net = PreferenceNetwork::from_orders({{0, 1, 2, 3},
                                                                {1, 0, 3, 2},
                                                                {2, 0, 1, 3},
                                                                {3, 1, 0, 2}});
  CHECK(is_harmon(net, set1({1, 2, 3}), MajorityRule::weak));
  CHECK(is_harmon(net, set1({1, 2, 4}), MajorityRule::weak));
  CHECK(!is_harmon(net, set1({1, 2, 3}), MajorityRule::strict));

  const CommunitySet grown = as_set(clique_growing(net, MajorityRule::weak));
  CHECK(grown.contains(set1({1, 2, 3})));
  CHECK(grown.contains(set1({1, 2, 4})));

  GrowOptions scan;
  scan.assert_unique_extension = true;
  CHECK_THROWS_AS((void)clique_growing(net, MajorityRule::weak, scan), std::logic_error);
}

TEST_CASE("cliques always survive into the grown family") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(bounded(rng, 8));
    const PreferenceNetwork net = uniform_random(n, rng());
    const CommunitySet grown = as_set(clique_growing(net, MajorityRule::strict));
    for (const IndividualSet& clique : enumerate_cliques(net).cliques) {
      CHECK(grown.contains(clique));
    }
    // Size stays within the quadratic envelope.
    CHECK(grown.size() <= 2 * n * n);
  }
}

TEST_CASE("canonical enumeration and sampling") {
  const PreferenceNetwork net = village6();
  const std::vector<IndividualSet> support = enumerate_communities(net, MajorityRule::strict);
  REQUIRE(support.size() == 7);
  CHECK(support.front() == set1({1}));
  CHECK(support[1] == set1({4}));
  CHECK(support.back() == IndividualSet::full(6));
  for (std::size_t i = 1; i < support.size(); ++i) {
    CHECK(canonical_less(support[i - 1], support[i]));
  }

  CHECK(sample_uniform(net, MajorityRule::strict, 7) ==
        sample_uniform(net, MajorityRule::strict, 7));

  // Frequencies over a fixed seeded stream stay within 3 sigma of uniform.
  const int draws = 30000;
  std::vector<long> counts(support.size(), 0);
  for (int draw = 0; draw < draws; ++draw) {
    const IndividualSet s = sample_uniform(net, MajorityRule::strict,
                                           static_cast<std::uint64_t>(draw) * 2654435761u + 17);
    bool matched = false;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i] == s) {
        ++counts[i];
        matched = true;
        break;
      }
    }
    REQUIRE(matched);
  }
  const double expected = static_cast<double>(draws) / static_cast<double>(support.size());
  const double sigma = std::sqrt(expected * (1.0 - 1.0 / static_cast<double>(support.size())));
  for (long c : counts) {
    CHECK(std::abs(static_cast<double>(c) - expected) <= 3.0 * sigma);
  }
}
