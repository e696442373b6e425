/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/grow.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "prefnet/generators.hpp"
#include "prefnet/stability.hpp"

namespace prefnet {

namespace {

// Answers "is s + {u} harmon?" for many u against a fixed base set s.
// pref_count_[x][v] counts the members of s whose order prefers x to v, so
// each candidate test is O(|s| * n) instead of O(|s|^2 * n).
class HarmonExtender {
 public:
  HarmonExtender(const PreferenceNetwork& net, const IndividualSet& s)
      : net_(net), s_(s), n_(net.size()),
        in_s_(static_cast<std::size_t>(n_), 0),
        pref_count_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (Individual v : s_) in_s_[static_cast<std::size_t>(v)] = 1;
    for (Individual w : s_) {
      const OrderList& order = net_.order_of(w).order();
      for (int i = 0; i < n_; ++i) {
        const std::size_t row =
            static_cast<std::size_t>(order[static_cast<std::size_t>(i)]) *
            static_cast<std::size_t>(n_);
        for (int j = i + 1; j < n_; ++j) {
          ++pref_count_[row + static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
        }
      }
    }
  }

  // Whether s + {u} passes the harmon test. Every pair (x in s+{u},
  // v outside) votes over the other |s| members of s + {u}.
  bool accepts(Individual u, MajorityRule rule) const {
    const int voters = s_.size();
    const TotalOrder& u_order = net_.order_of(u);

    const std::size_t u_row = static_cast<std::size_t>(u) * static_cast<std::size_t>(n_);
    for (Individual v = 0; v < n_; ++v) {
      if (v == u || in_s_[static_cast<std::size_t>(v)]) continue;
      if (!majority_holds(pref_count_[u_row + static_cast<std::size_t>(v)], voters, rule)) {
        return false;
      }
    }

    for (Individual x : s_) {
      const TotalOrder& x_order = net_.order_of(x);
      const std::size_t x_row = static_cast<std::size_t>(x) * static_cast<std::size_t>(n_);
      for (Individual v = 0; v < n_; ++v) {
        if (v == u || in_s_[static_cast<std::size_t>(v)]) continue;
        int count = pref_count_[x_row + static_cast<std::size_t>(v)];
        if (x_order.prefers(x, v)) --count;  // x does not vote on its own pairs
        if (u_order.prefers(x, v)) ++count;
        if (!majority_holds(count, voters, rule)) return false;
      }
    }
    return true;
  }

 private:
  const PreferenceNetwork& net_;
  const IndividualSet& s_;
  int n_;
  std::vector<char> in_s_;
  std::vector<int> pref_count_;
};

}  // namespace

GrowResult clique_growing(const PreferenceNetwork& net, MajorityRule rule,
                          const GrowOptions& options) {
  const int n = net.size();
  GrowResult result;
  CommunitySet seen;
  std::deque<std::size_t> worklist;

  for (const IndividualSet& clique : enumerate_cliques(net).cliques) {
    seen.insert(clique);
    worklist.push_back(result.communities.size());
    result.communities.push_back(clique);
    result.provenance.push_back(GrowProvenance{clique, {}});
  }

  while (!worklist.empty()) {
    std::size_t index;
    if (options.lifo) {
      index = worklist.back();
      worklist.pop_back();
    } else {
      index = worklist.front();
      worklist.pop_front();
    }
    const IndividualSet current = result.communities[index];
    const GrowProvenance origin = result.provenance[index];

    HarmonExtender extender(net, current);
    int accepted = 0;
    for (Individual u = 0; u < n; ++u) {
      if (current.contains(u)) continue;
      if (!extender.accepts(u, rule)) continue;
      ++accepted;
      IndividualSet extended = current.with(u);
      if (seen.insert(extended)) {
        GrowProvenance p = origin;
        p.chain.push_back(u);
        worklist.push_back(result.communities.size());
        result.communities.push_back(std::move(extended));
        result.provenance.push_back(std::move(p));
      }
    }
    if (options.assert_unique_extension && accepted > 1) {
      throw std::logic_error("clique_growing: set accepted " +
                             std::to_string(accepted) + " extensions");
    }
  }
  return result;
}

CommunitySet grow_scomp(const PreferenceNetwork& net, MajorityRule rule) {
  CommunitySet out;
  for (const IndividualSet& s : clique_growing(net, rule).communities) {
    if (in_scomp(net, s)) out.insert(s);
  }
  return out;
}

std::vector<IndividualSet> enumerate_communities(const PreferenceNetwork& net,
                                                 MajorityRule rule) {
  return grow_scomp(net, rule).items();
}

IndividualSet sample_uniform(const PreferenceNetwork& net, MajorityRule rule,
                             std::uint64_t seed) {
  const std::vector<IndividualSet> support = enumerate_communities(net, rule);
  std::mt19937_64 rng(seed);
  return support[static_cast<std::size_t>(bounded(rng, support.size()))];
}

}  // namespace prefnet
