/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include <doctest.h>

#include <random>

#include "prefnet/generators.hpp"
#include "prefnet/oracles.hpp"
#include "support.hpp"

using namespace prefnet;
using testsupport::set1;
using testsupport::village6;

TEST_CASE("bijection search for group preference") {
  const PreferenceNetwork net = village6();
  CHECK(brute_group_prefers(net.order_of(1), set1({3, 4}), set1({5, 6})));
  CHECK(!brute_group_prefers(net.order_of(4), set1({3, 4}), set1({5, 6})));
  CHECK(brute_group_prefers(net.order_of(0), set1({2}), set1({3})) ==
        net.order_of(0).prefers(1, 2));
}

TEST_CASE("self-approval oracle") {
  const PreferenceNetwork net = village6();
  CHECK(!brute_self_approving(net, set1({2, 5})));
  CHECK(brute_self_approving(net, IndividualSet::full(6)));
  CHECK(brute_self_approving(net, set1({1, 2, 3})));
}

TEST_CASE("group stability oracle") {
  const PreferenceNetwork net = village6();
  CHECK(!brute_group_stable(net, set1({2, 5})));
  CHECK(brute_group_stable(net, set1({1, 2, 3, 4})));
  CHECK(brute_group_stable(net, IndividualSet::full(6)));
}

TEST_CASE("strong group stability oracle") {
  const PreferenceNetwork net = village6();
  CHECK(!brute_strongly_group_stable(net, set1({1, 2, 3, 4})));
  CHECK(brute_strongly_group_stable(net, IndividualSet::full(6)));
  CHECK(brute_strongly_group_stable(net, set1({4, 5, 6})));
}

TEST_CASE("implication chain among the oracles") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(bounded(rng, 5));
    const PreferenceNetwork net = uniform_random(n, rng());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Individual> members;
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) members.push_back(i);
      }
      const IndividualSet s(members);
      if (brute_strongly_group_stable(net, s)) CHECK(brute_group_stable(net, s));
      if (brute_group_stable(net, s) && s.size() >= 2) {
        CHECK(brute_self_approving(net, s));
      }
    }
  }
}

TEST_CASE("budget refusal") {
  const PreferenceNetwork big = uniform_random(10, 1);
  CHECK_THROWS_AS((void)brute_group_stable(big, set1({1, 2, 3})), BudgetError);
  CHECK_THROWS_AS((void)brute_self_approving(big, set1({1, 2, 3})), BudgetError);
  CHECK_THROWS_AS((void)brute_strongly_group_stable(big, set1({1, 2, 3})), BudgetError);
  CHECK_THROWS_AS((void)brute_cliques(big), BudgetError);

  // Custom budgets gate the enumeration volume too.
  OracleBudget tight;
  tight.max_n = 30;
  tight.max_subsets = 100;
  const PreferenceNetwork mid = uniform_random(12, 2);
  CHECK_THROWS_AS((void)brute_strongly_group_stable(mid, IndividualSet::full(12), tight),
                  BudgetError);

  // Within budget nothing throws.
  const PreferenceNetwork ok = uniform_random(6, 3);
  CHECK_NOTHROW((void)brute_group_stable(ok, set1({1, 2, 3})));
}

TEST_CASE("clique oracle fixtures") {
  CHECK(brute_cliques(village6()).size() == 7);
  CHECK(brute_cliques(uniform_random(1, 9)).items() ==
        std::vector<IndividualSet>{IndividualSet{0}});
}
