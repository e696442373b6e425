/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prefnet {

// Individuals are dense 0-based indices into a population of size n.
// All file and CLI I/O is 1-based; the conversion happens at the I/O layer.
using Individual = int;

// An ordering of some subset of individuals, most preferred first.
using OrderList = std::vector<Individual>;

// A sorted, duplicate-free set of individuals.
class IndividualSet {
 public:
  IndividualSet() = default;
  IndividualSet(std::initializer_list<Individual> ids);
  explicit IndividualSet(std::vector<Individual> ids);

  // {0, 1, ..., n-1}
  static IndividualSet full(int n);

  bool contains(Individual u) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  Individual min() const;
  const std::vector<Individual>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  IndividualSet with(Individual u) const;
  IndividualSet without(Individual u) const;
  bool subset_of(const IndividualSet& other) const;
  bool disjoint_with(const IndividualSet& other) const;

  friend bool operator==(const IndividualSet&, const IndividualSet&) = default;

 private:
  std::vector<Individual> members_;
};

IndividualSet set_union(const IndividualSet& a, const IndividualSet& b);
IndividualSet set_intersection(const IndividualSet& a, const IndividualSet& b);
IndividualSet set_difference(const IndividualSet& a, const IndividualSet& b);

// Orders sets by size first, then lexicographically by members. This is the
// canonical order used for all community listings.
bool canonical_less(const IndividualSet& a, const IndividualSet& b);

// A strict total order over the full population {0..n-1}. Stores both the
// order list (most preferred first) and the inverse rank table, so rank
// lookups are constant time. Ranks are 1-based: the most preferred
// individual has rank 1.
class TotalOrder {
 public:
  explicit TotalOrder(OrderList most_preferred_first);

  int size() const { return static_cast<int>(order_.size()); }
  int rank_of(Individual u) const;
  Individual at_rank(int rank) const;
  Individual first() const { return order_.front(); }
  bool prefers(Individual u, Individual v) const;
  const OrderList& order() const { return order_; }

  friend bool operator==(const TotalOrder&, const TotalOrder&) = default;

 private:
  OrderList order_;
  std::vector<int> rank_;  // rank_[u] = 1-based position of u in order_
};

// A population together with one total order per individual.
// Immutable after construction; all operations on it are pure.
class PreferenceNetwork {
 public:
  explicit PreferenceNetwork(std::vector<TotalOrder> profile);
  static PreferenceNetwork from_orders(const std::vector<OrderList>& orders);

  int size() const { return static_cast<int>(profile_.size()); }
  const TotalOrder& order_of(Individual u) const;
  const std::vector<TotalOrder>& profile() const { return profile_; }

  friend bool operator==(const PreferenceNetwork&, const PreferenceNetwork&) = default;

 private:
  std::vector<TotalOrder> profile_;
};

// A deduplicated collection of individual sets kept in canonical order.
class CommunitySet {
 public:
  // Returns false if the set was already present.
  bool insert(IndividualSet s);
  bool contains(const IndividualSet& s) const;
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  const std::vector<IndividualSet>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const CommunitySet&, const CommunitySet&) = default;

 private:
  std::vector<IndividualSet> items_;  // sorted by canonical_less
};

// Ranks of the members of s under the given order, ascending.
std::vector<int> sorted_ranks(const TotalOrder& order, const IndividualSet& s);

// True iff the elements of gp and g can be aligned so that every gp element
// beats its g partner. gp and g must be non-empty, disjoint and of equal
// size. Decided by comparing rank-sorted elements position-wise; the
// bijection-enumeration oracle must agree.
bool group_prefers(const TotalOrder& order, const IndividualSet& gp,
                   const IndividualSet& g);

// The k members of s with the smallest ranks under order. 0 <= k <= |s|.
IndividualSet top_k(const TotalOrder& order, const IndividualSet& s, int k);

// Compares the top-k of a and b where k = min(|a|, |b|). Returns false when
// either set is empty (k = 0). a and b must be disjoint.
bool weak_prefers(const TotalOrder& order, const IndividualSet& a,
                  const IndividualSet& b);

// Sub-network over the kept individuals, re-indexed densely. Relative ranks
// among kept individuals are preserved. old_ids[new_id] gives the original
// id of each re-indexed individual.
struct RestrictResult {
  PreferenceNetwork network;
  std::vector<Individual> old_ids;
};
RestrictResult restrict(const PreferenceNetwork& net, const IndividualSet& keep);

// Relabels the network along the bijection sigma: the order of sigma[u]
// ranks sigma[v] exactly where u's order ranked v.
PreferenceNetwork apply_permutation(const PreferenceNetwork& net,
                                    const std::vector<Individual>& sigma);

// Orders left's individuals before right's, preserving both internal orders.
// The two lists must cover disjoint individuals.
OrderList concat(const OrderList& left, const OrderList& right);

}  // namespace prefnet
