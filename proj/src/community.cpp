/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/community.hpp"

#include <algorithm>

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

}  // namespace

bool majority_holds(int count, int voters, MajorityRule rule) {
  return rule == MajorityRule::strict ? 2 * count > voters : 2 * count >= voters;
}

bool is_clique(const PreferenceNetwork& net, const IndividualSet& s) {
  require_valid_subset(net, s, "is_clique");
  const int k = s.size();
  for (Individual u : s) {
    const OrderList& order = net.order_of(u).order();
    for (int pos = 0; pos < k; ++pos) {
      if (!s.contains(order[static_cast<std::size_t>(pos)])) return false;
    }
  }
  return true;
}

CliqueFamily enumerate_cliques(const PreferenceNetwork& net) {
  const int n = net.size();
  CliqueFamily out;
  std::vector<char> in_candidate(static_cast<std::size_t>(n), 0);

  for (Individual u = 0; u < n; ++u) {
    const OrderList& order = net.order_of(u).order();
    std::vector<Individual> prefix;  // sorted members of the current prefix
    prefix.reserve(static_cast<std::size_t>(n));

    for (int k = 1; k <= n; ++k) {
      Individual added = order[static_cast<std::size_t>(k - 1)];
      prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), added), added);
      IndividualSet candidate(prefix);
      if (out.cliques.contains(candidate)) continue;

      for (Individual v : prefix) in_candidate[static_cast<std::size_t>(v)] = 1;
      bool ok = true;
      for (Individual w : prefix) {
        const OrderList& worder = net.order_of(w).order();
        for (int pos = 0; pos < k && ok; ++pos) {
          ok = in_candidate[static_cast<std::size_t>(worder[static_cast<std::size_t>(pos)])] != 0;
        }
        if (!ok) break;
      }
      for (Individual v : prefix) in_candidate[static_cast<std::size_t>(v)] = 0;

      if (ok) out.cliques.insert(std::move(candidate));
    }
  }
  return out;
}

bool is_clique_g(const PreferenceNetwork& net, const IndividualSet& s,
                 const SlackFn& g) {
  require_valid_subset(net, s, "is_clique_g");
  require(static_cast<bool>(g), "is_clique_g: missing slack function");
  const int slack = g(s.size());
  require(slack >= 0, "is_clique_g: slack must be non-negative");
  const int window = s.size() + slack;
  for (Individual w : s) {
    const TotalOrder& order = net.order_of(w);
    for (Individual u : s) {
      if (order.rank_of(u) > window) return false;
    }
  }
  return true;
}

bool is_harmonious(const PreferenceNetwork& net, const IndividualSet& s,
                   double lambda) {
  require_valid_subset(net, s, "is_harmonious");
  require(lambda >= 0.0 && lambda <= 1.0, "is_harmonious: lambda outside [0,1]");
  const int n = net.size();
  const double threshold = lambda * s.size();
  for (Individual u : s) {
    for (Individual v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      int count = 0;
      for (Individual w : s) {
        if (net.order_of(w).prefers(u, v)) ++count;
      }
      if (count < threshold) return false;
    }
  }
  return true;
}

bool is_harmon(const PreferenceNetwork& net, const IndividualSet& s,
               MajorityRule rule) {
  require_valid_subset(net, s, "is_harmon");
  const int n = net.size();
  const int voters = s.size() - 1;
  for (Individual u : s) {
    for (Individual v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      int count = 0;
      for (Individual w : s) {
        if (w != u && net.order_of(w).prefers(u, v)) ++count;
      }
      if (!majority_holds(count, voters, rule)) return false;
    }
  }
  return true;
}

}  // namespace prefnet
