/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/generators.hpp"

#include <algorithm>
#include <limits>

namespace prefnet {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

// Recurses over a block of individuals kept in sigma order, so a half's
// restriction of sigma is the half itself.
void build_profile(const std::vector<Individual>& block,
                   std::vector<OrderList>& orders) {
  if (block.size() == 1) {
    orders[static_cast<std::size_t>(block[0])] = {block[0]};
    return;
  }
  const std::size_t mid = (block.size() + 1) / 2;
  const std::vector<Individual> first(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(mid));
  const std::vector<Individual> second(block.begin() + static_cast<std::ptrdiff_t>(mid), block.end());
  build_profile(first, orders);
  build_profile(second, orders);
  for (Individual v : first) {
    OrderList& o = orders[static_cast<std::size_t>(v)];
    o.insert(o.end(), second.begin(), second.end());
  }
  for (Individual v : second) {
    OrderList& o = orders[static_cast<std::size_t>(v)];
    o.insert(o.end(), first.begin(), first.end());
  }
}

}  // namespace

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  require(bound > 0, "bounded: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

std::vector<Individual> random_permutation(std::mt19937_64& rng, int n) {
  require(n >= 1, "random_permutation: n must be positive");
  std::vector<Individual> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = out.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(rng, i + 1));
    std::swap(out[i], out[j]);
  }
  return out;
}

PreferenceNetwork get_profile(int n) {
  require(n >= 1, "get_profile: n must be positive");
  OrderList sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
  return get_profile(n, sigma);
}

PreferenceNetwork get_profile(int n, const OrderList& sigma) {
  require(n >= 1, "get_profile: n must be positive");
  require(static_cast<int>(sigma.size()) == n, "get_profile: sigma size mismatch");
  TotalOrder check(sigma);  // validates sigma is a permutation of 0..n-1
  (void)check;

  std::vector<OrderList> orders(static_cast<std::size_t>(n));
  build_profile(sigma, orders);
  return PreferenceNetwork::from_orders(orders);
}

PreferenceNetwork hero_sidekick(int m) {
  require(m >= 1, "hero_sidekick: m must be positive");
  const int n = 2 * m;
  std::vector<OrderList> orders(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    OrderList o;
    o.reserve(static_cast<std::size_t>(n));
    o.push_back(i);
    for (int h = 0; h < m; ++h) {
      if (h != i) o.push_back(h);
    }
    o.push_back(m + i);
    for (int s = 0; s < m; ++s) {
      if (s != i) o.push_back(m + s);
    }
    orders[static_cast<std::size_t>(i)] = o;
    orders[static_cast<std::size_t>(m + i)] = std::move(o);
  }
  return PreferenceNetwork::from_orders(orders);
}

PreferenceNetwork uniform_random(int n, std::uint64_t seed) {
  require(n >= 1, "uniform_random: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<OrderList> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) orders.push_back(random_permutation(rng, n));
  return PreferenceNetwork::from_orders(orders);
}

}  // namespace prefnet
