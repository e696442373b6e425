/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace prefnet {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

void require_valid_subset(const PreferenceNetwork& net, const IndividualSet& s,
                          const char* what) {
  if (s.empty()) throw std::domain_error(std::string(what) + ": empty set");
  if (s.min() < 0 || s.members().back() >= net.size()) {
    throw std::domain_error(std::string(what) + ": individual out of range");
  }
}

void check_population(int n, const OracleBudget& budget, const char* what) {
  if (n > budget.max_n) {
    throw BudgetError(std::string(what) + ": population " + std::to_string(n) +
                      " exceeds oracle budget max_n=" + std::to_string(budget.max_n));
  }
}

void check_subsets(std::uint64_t count, const OracleBudget& budget, const char* what) {
  if (count > budget.max_subsets) {
    throw BudgetError(std::string(what) + ": enumeration of " + std::to_string(count) +
                      " cases exceeds oracle budget max_subsets=" +
                      std::to_string(budget.max_subsets));
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) out = saturating_mul(out, static_cast<std::uint64_t>(i));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    out = saturating_mul(out, static_cast<std::uint64_t>(n - i));
    out /= static_cast<std::uint64_t>(i + 1);
  }
  return out;
}

// Calls fn for every size-k subset of pool; stops early when fn returns true.
bool any_combination(const std::vector<Individual>& pool, int k,
                     const std::function<bool(const std::vector<Individual>&)>& fn) {
  const int m = static_cast<int>(pool.size());
  if (k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Individual> pick(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) {
      pick[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    if (fn(pick)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

bool brute_group_prefers_vecs(const TotalOrder& order,
                              const std::vector<Individual>& gp,
                              std::vector<Individual> g) {
  std::sort(g.begin(), g.end());
  do {
    bool dominates = true;
    for (std::size_t i = 0; i < gp.size() && dominates; ++i) {
      dominates = order.prefers(gp[i], g[i]);
    }
    if (dominates) return true;
  } while (std::next_permutation(g.begin(), g.end()));
  return false;
}

// Definitional weak preference: select the top-k of each side, then search
// for a dominating bijection.
bool brute_weak_prefers(const TotalOrder& order, const IndividualSet& a,
                        const IndividualSet& b) {
  const int k = std::min(a.size(), b.size());
  if (k == 0) return false;
  const IndividualSet ta = top_k(order, a, k);
  const IndividualSet tb = top_k(order, b, k);
  return brute_group_prefers_vecs(order, ta.members(), tb.members());
}

}  // namespace

bool brute_group_prefers(const TotalOrder& order, const IndividualSet& gp,
                         const IndividualSet& g, const OracleBudget& budget) {
  require(!gp.empty() && !g.empty(), "brute_group_prefers: sets must be non-empty");
  require(gp.size() == g.size(), "brute_group_prefers: sets must have equal size");
  require(gp.disjoint_with(g), "brute_group_prefers: sets must be disjoint");
  check_subsets(factorial(g.size()), budget, "brute_group_prefers");
  return brute_group_prefers_vecs(order, gp.members(), g.members());
}

bool brute_self_approving(const PreferenceNetwork& net, const IndividualSet& s,
                          const OracleBudget& budget) {
  require_valid_subset(net, s, "brute_self_approving");
  check_population(net.size(), budget, "brute_self_approving");
  const IndividualSet outside = set_difference(IndividualSet::full(net.size()), s);
  check_subsets(saturating_mul(binomial(outside.size(), s.size()), factorial(s.size())),
                budget, "brute_self_approving");

  const bool displaced = any_combination(
      outside.members(), s.size(), [&](const std::vector<Individual>& pick) {
        for (Individual member : s) {
          if (!brute_group_prefers_vecs(net.order_of(member), pick, s.members())) {
            return false;
          }
        }
        return true;  // every member group-prefers the replacement set
      });
  return !displaced;
}

bool brute_group_stable(const PreferenceNetwork& net, const IndividualSet& s,
                        const OracleBudget& budget) {
  require_valid_subset(net, s, "brute_group_stable");
  check_population(net.size(), budget, "brute_group_stable");
  const IndividualSet outside = set_difference(IndividualSet::full(net.size()), s);

  std::uint64_t work = 0;
  for (int g = 1; g < s.size(); ++g) {
    work = work + saturating_mul(saturating_mul(binomial(s.size(), g),
                                                binomial(outside.size(), g)),
                                 factorial(g));
  }
  check_subsets(work, budget, "brute_group_stable");

  const std::vector<Individual>& members = s.members();
  const int m = s.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    std::vector<Individual> group;
    std::vector<Individual> rest;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        group.push_back(members[static_cast<std::size_t>(i)]);
      } else {
        rest.push_back(members[static_cast<std::size_t>(i)]);
      }
    }
    const bool deserted = any_combination(
        outside.members(), static_cast<int>(group.size()),
        [&](const std::vector<Individual>& replacement) {
          for (Individual member : rest) {
            if (!brute_group_prefers_vecs(net.order_of(member), replacement, group)) {
              return false;
            }
          }
          return true;
        });
    if (deserted) return false;
  }
  return true;
}

bool brute_strongly_group_stable(const PreferenceNetwork& net,
                                 const IndividualSet& s,
                                 const OracleBudget& budget) {
  require_valid_subset(net, s, "brute_strongly_group_stable");
  check_population(net.size(), budget, "brute_strongly_group_stable");
  check_subsets(std::uint64_t{1} << s.size(), budget, "brute_strongly_group_stable");
  const IndividualSet outside = set_difference(IndividualSet::full(net.size()), s);

  const std::vector<Individual>& members = s.members();
  const int m = s.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    std::vector<Individual> group;
    std::vector<Individual> rest;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        group.push_back(members[static_cast<std::size_t>(i)]);
      } else {
        rest.push_back(members[static_cast<std::size_t>(i)]);
      }
    }
    const IndividualSet group_set(group);
    bool all_prefer_outside = true;
    for (Individual member : rest) {
      if (!brute_weak_prefers(net.order_of(member), outside, group_set)) {
        all_prefer_outside = false;
        break;
      }
    }
    if (all_prefer_outside) return false;
  }
  return true;
}

CommunitySet brute_cliques(const PreferenceNetwork& net, const OracleBudget& budget) {
  check_population(net.size(), budget, "brute_cliques");
  const int n = net.size();
  check_subsets(std::uint64_t{1} << n, budget, "brute_cliques");

  CommunitySet out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Individual> members;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) members.push_back(i);
    }
    bool clique = true;
    for (Individual u : members) {
      const TotalOrder& order = net.order_of(u);
      for (Individual v : members) {
        for (Individual w = 0; w < n && clique; ++w) {
          if (mask & (std::uint64_t{1} << w)) continue;
          clique = order.prefers(v, w);
        }
        if (!clique) break;
      }
      if (!clique) break;
    }
    if (clique) out.insert(IndividualSet(members));
  }
  return out;
}

}  // namespace prefnet
