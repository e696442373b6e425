/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/stability.hpp"

#include <algorithm>

namespace prefnet {

namespace {

void require_valid_subset(const PreferenceNetwork& net, const IndividualSet& s,
                          const char* what) {
  if (s.empty()) throw std::domain_error(std::string(what) + ": empty set");
  if (s.min() < 0 || s.members().back() >= net.size()) {
    throw std::domain_error(std::string(what) + ": individual out of range");
  }
}

// Sorted complement ranks per member, filled on first use. The complement
// never changes during a call, so each member's array is computed once.
class ComplementRanks {
 public:
  ComplementRanks(const PreferenceNetwork& net, const IndividualSet& complement)
      : net_(net), complement_(complement), cache_(static_cast<std::size_t>(net.size())) {}

  const std::vector<int>& of(Individual member) {
    auto& slot = cache_[static_cast<std::size_t>(member)];
    if (!slot) slot = sorted_ranks(net_.order_of(member), complement_);
    return *slot;
  }

 private:
  const PreferenceNetwork& net_;
  const IndividualSet& complement_;
  std::vector<std::optional<std::vector<int>>> cache_;
};

// True iff the member's order weakly prefers the complement of s to U,
// with U given by its members. Equivalent to weak_prefers on the two sets:
// the top-k ranks of each side are their k smallest ranks.
bool weakly_prefers_complement(const PreferenceNetwork& net, Individual member,
                               const std::vector<int>& complement_ranks,
                               const std::vector<Individual>& u_members) {
  if (complement_ranks.empty()) return false;
  const std::size_t k = std::min(complement_ranks.size(), u_members.size());
  std::vector<int> u_ranks;
  u_ranks.reserve(u_members.size());
  const TotalOrder& order = net.order_of(member);
  for (Individual v : u_members) u_ranks.push_back(order.rank_of(v));
  std::sort(u_ranks.begin(), u_ranks.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (complement_ranks[i] >= u_ranks[i]) return false;
  }
  return true;
}

SgsTrace run_decision(const PreferenceNetwork& net, const IndividualSet& s,
                      std::mt19937_64* rng) {
  require_valid_subset(net, s, "is_strongly_group_stable");
  const int n = net.size();

  // No non-empty proper subset exists for a singleton; for s = V the
  // complement is empty and nothing is ever weakly preferred to anything.
  if (s.size() == 1 || s.size() == n) return SgsTrace{true, std::nullopt};

  const IndividualSet complement = set_difference(IndividualSet::full(n), s);
  ComplementRanks complement_ranks(net, complement);

  std::vector<char> in_u(static_cast<std::size_t>(n), 0);
  std::vector<Individual> u_members;
  std::vector<Individual> eligible;

  for (Individual seed : s) {
    std::fill(in_u.begin(), in_u.end(), 0);
    u_members.assign(1, seed);
    in_u[static_cast<std::size_t>(seed)] = 1;

    while (static_cast<int>(u_members.size()) != s.size()) {
      Individual chosen = -1;
      if (rng == nullptr) {
        for (Individual cand : s) {
          if (in_u[static_cast<std::size_t>(cand)]) continue;
          if (!weakly_prefers_complement(net, cand, complement_ranks.of(cand), u_members)) {
            chosen = cand;
            break;
          }
        }
      } else {
        eligible.clear();
        for (Individual cand : s) {
          if (in_u[static_cast<std::size_t>(cand)]) continue;
          if (!weakly_prefers_complement(net, cand, complement_ranks.of(cand), u_members)) {
            eligible.push_back(cand);
          }
        }
        if (!eligible.empty()) {
          chosen = eligible[(*rng)() % eligible.size()];
        }
      }

      if (chosen < 0) {
        return SgsTrace{false, SgsWitness{seed, IndividualSet(u_members)}};
      }
      in_u[static_cast<std::size_t>(chosen)] = 1;
      u_members.push_back(chosen);
    }
  }
  return SgsTrace{true, std::nullopt};
}

}  // namespace

SgsTrace is_strongly_group_stable(const PreferenceNetwork& net,
                                  const IndividualSet& s) {
  return run_decision(net, s, nullptr);
}

SgsTrace is_strongly_group_stable_randomized(const PreferenceNetwork& net,
                                             const IndividualSet& s,
                                             std::mt19937_64& rng) {
  return run_decision(net, s, &rng);
}

bool is_sa_prime(const PreferenceNetwork& net, const IndividualSet& s) {
  require_valid_subset(net, s, "is_sa_prime");
  if (s.size() != 1) return true;
  const Individual u = s.min();
  return net.order_of(u).rank_of(u) == 1;
}

bool in_scomp(const PreferenceNetwork& net, const IndividualSet& s) {
  require_valid_subset(net, s, "in_scomp");
  return is_sa_prime(net, s) && is_strongly_group_stable(net, s).outcome;
}

}  // namespace prefnet
