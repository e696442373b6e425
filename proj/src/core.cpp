/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace prefnet {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

void require_members_within(const IndividualSet& s, int n, const char* what) {
  if (!s.empty() && (s.min() < 0 || s.members().back() >= n)) {
    throw std::domain_error(std::string(what) + ": individual out of range");
  }
}

}  // namespace

IndividualSet::IndividualSet(std::initializer_list<Individual> ids)
    : IndividualSet(std::vector<Individual>(ids)) {}

IndividualSet::IndividualSet(std::vector<Individual> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw std::domain_error("IndividualSet: negative individual id");
  }
}

IndividualSet IndividualSet::full(int n) {
  require(n >= 0, "IndividualSet::full: negative size");
  std::vector<Individual> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  IndividualSet s;
  s.members_ = std::move(ids);
  return s;
}

bool IndividualSet::contains(Individual u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

Individual IndividualSet::min() const {
  require(!members_.empty(), "IndividualSet::min: empty set");
  return members_.front();
}

IndividualSet IndividualSet::with(Individual u) const {
  IndividualSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), u);
  if (it == out.members_.end() || *it != u) out.members_.insert(it, u);
  return out;
}

IndividualSet IndividualSet::without(Individual u) const {
  IndividualSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), u);
  if (it != out.members_.end() && *it == u) out.members_.erase(it);
  return out;
}

bool IndividualSet::subset_of(const IndividualSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool IndividualSet::disjoint_with(const IndividualSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

IndividualSet set_union(const IndividualSet& a, const IndividualSet& b) {
  std::vector<Individual> out;
  out.reserve(a.members().size() + b.members().size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndividualSet(std::move(out));
}

IndividualSet set_intersection(const IndividualSet& a, const IndividualSet& b) {
  std::vector<Individual> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndividualSet(std::move(out));
}

IndividualSet set_difference(const IndividualSet& a, const IndividualSet& b) {
  std::vector<Individual> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndividualSet(std::move(out));
}

bool canonical_less(const IndividualSet& a, const IndividualSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

TotalOrder::TotalOrder(OrderList most_preferred_first) : order_(std::move(most_preferred_first)) {
  const int n = static_cast<int>(order_.size());
  require(n >= 1, "TotalOrder: empty order");
  rank_.assign(static_cast<std::size_t>(n), 0);
  for (int pos = 0; pos < n; ++pos) {
    Individual u = order_[static_cast<std::size_t>(pos)];
    require(u >= 0 && u < n, "TotalOrder: individual out of range");
    require(rank_[static_cast<std::size_t>(u)] == 0, "TotalOrder: duplicate individual");
    rank_[static_cast<std::size_t>(u)] = pos + 1;
  }
}

int TotalOrder::rank_of(Individual u) const {
  require(u >= 0 && u < size(), "rank_of: individual out of range");
  return rank_[static_cast<std::size_t>(u)];
}

Individual TotalOrder::at_rank(int rank) const {
  require(rank >= 1 && rank <= size(), "at_rank: rank out of range");
  return order_[static_cast<std::size_t>(rank - 1)];
}

bool TotalOrder::prefers(Individual u, Individual v) const {
  return rank_of(u) < rank_of(v);
}

PreferenceNetwork::PreferenceNetwork(std::vector<TotalOrder> profile) : profile_(std::move(profile)) {
  require(!profile_.empty(), "PreferenceNetwork: empty profile");
  const int n = static_cast<int>(profile_.size());
  for (const TotalOrder& order : profile_) {
    require(order.size() == n, "PreferenceNetwork: order size mismatch");
  }
}

PreferenceNetwork PreferenceNetwork::from_orders(const std::vector<OrderList>& orders) {
  std::vector<TotalOrder> profile;
  profile.reserve(orders.size());
  for (const OrderList& o : orders) profile.emplace_back(o);
  return PreferenceNetwork(std::move(profile));
}

const TotalOrder& PreferenceNetwork::order_of(Individual u) const {
  require(u >= 0 && u < size(), "order_of: individual out of range");
  return profile_[static_cast<std::size_t>(u)];
}

bool CommunitySet::insert(IndividualSet s) {
  auto it = std::lower_bound(items_.begin(), items_.end(), s, canonical_less);
  if (it != items_.end() && *it == s) return false;
  items_.insert(it, std::move(s));
  return true;
}

bool CommunitySet::contains(const IndividualSet& s) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), s, canonical_less);
  return it != items_.end() && *it == s;
}

std::vector<int> sorted_ranks(const TotalOrder& order, const IndividualSet& s) {
  std::vector<int> ranks;
  ranks.reserve(s.members().size());
  for (Individual u : s) ranks.push_back(order.rank_of(u));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

bool group_prefers(const TotalOrder& order, const IndividualSet& gp,
                   const IndividualSet& g) {
  require(!gp.empty() && !g.empty(), "group_prefers: sets must be non-empty");
  require(gp.size() == g.size(), "group_prefers: sets must have equal size");
  require(gp.disjoint_with(g), "group_prefers: sets must be disjoint");
  require_members_within(gp, order.size(), "group_prefers");
  require_members_within(g, order.size(), "group_prefers");

  // An alignment exists iff the i-th best of gp beats the i-th best of g
  // for every i.
  std::vector<int> a = sorted_ranks(order, gp);
  std::vector<int> b = sorted_ranks(order, g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= b[i]) return false;
  }
  return true;
}

IndividualSet top_k(const TotalOrder& order, const IndividualSet& s, int k) {
  require(k >= 0 && k <= s.size(), "top_k: k out of range");
  require_members_within(s, order.size(), "top_k");
  if (k == 0) return IndividualSet{};
  std::vector<std::pair<int, Individual>> by_rank;
  by_rank.reserve(s.members().size());
  for (Individual u : s) by_rank.emplace_back(order.rank_of(u), u);
  std::sort(by_rank.begin(), by_rank.end());
  std::vector<Individual> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.push_back(by_rank[static_cast<std::size_t>(i)].second);
  return IndividualSet(std::move(out));
}

bool weak_prefers(const TotalOrder& order, const IndividualSet& a,
                  const IndividualSet& b) {
  require(a.disjoint_with(b), "weak_prefers: sets must be disjoint");
  const int k = std::min(a.size(), b.size());
  if (k == 0) return false;
  return group_prefers(order, top_k(order, a, k), top_k(order, b, k));
}

RestrictResult restrict(const PreferenceNetwork& net, const IndividualSet& keep) {
  require(!keep.empty(), "restrict: keep must be non-empty");
  require_members_within(keep, net.size(), "restrict");

  const int n = net.size();
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < keep.size(); ++i) {
    new_id[static_cast<std::size_t>(keep.members()[static_cast<std::size_t>(i)])] = i;
  }

  std::vector<OrderList> orders;
  orders.reserve(keep.members().size());
  for (Individual u : keep) {
    OrderList reduced;
    reduced.reserve(keep.members().size());
    for (Individual v : net.order_of(u).order()) {
      if (new_id[static_cast<std::size_t>(v)] >= 0) {
        reduced.push_back(new_id[static_cast<std::size_t>(v)]);
      }
    }
    orders.push_back(std::move(reduced));
  }
  return RestrictResult{PreferenceNetwork::from_orders(orders), keep.members()};
}

PreferenceNetwork apply_permutation(const PreferenceNetwork& net,
                                    const std::vector<Individual>& sigma) {
  const int n = net.size();
  require(static_cast<int>(sigma.size()) == n, "apply_permutation: size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Individual v : sigma) {
    require(v >= 0 && v < n, "apply_permutation: image out of range");
    require(!seen[static_cast<std::size_t>(v)], "apply_permutation: not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<OrderList> orders(static_cast<std::size_t>(n));
  for (Individual u = 0; u < n; ++u) {
    OrderList mapped;
    mapped.reserve(static_cast<std::size_t>(n));
    for (Individual v : net.order_of(u).order()) {
      mapped.push_back(sigma[static_cast<std::size_t>(v)]);
    }
    orders[static_cast<std::size_t>(sigma[static_cast<std::size_t>(u)])] = std::move(mapped);
  }
  return PreferenceNetwork::from_orders(orders);
}

OrderList concat(const OrderList& left, const OrderList& right) {
  std::unordered_set<Individual> seen;
  for (Individual u : left) {
    require(seen.insert(u).second, "concat: duplicate individual in left order");
  }
  for (Individual u : right) {
    require(seen.insert(u).second, "concat: orders must cover disjoint individuals");
  }
  OrderList out = left;
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

}  // namespace prefnet
