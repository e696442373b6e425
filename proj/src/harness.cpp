/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/harness.hpp"

#include <algorithm>
#include <sstream>

#include "prefnet/generators.hpp"
#include "prefnet/grow.hpp"
#include "prefnet/stability.hpp"

namespace prefnet {

namespace {

const char* kAnonymity = "anonymity";
const char* kMonotonicity = "monotonicity";
const char* kEmbedding = "embedding";
const char* kWorldCommunity = "world-community";
const char* kSaPrime = "sa-prime";
const char* kSgs = "sgs";

std::string show_set(const IndividualSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i > 0) out << ',';
    out << s.members()[i] + 1;
  }
  out << '}';
  return out.str();
}

IndividualSet random_nonempty_subset(std::mt19937_64& rng, int n) {
  if (n < 1 || n > 62) throw std::domain_error("random_nonempty_subset: n out of range");
  const std::uint64_t mask = 1 + bounded(rng, (std::uint64_t{1} << n) - 1);
  std::vector<Individual> members;
  for (int i = 0; i < n; ++i) {
    if (mask & (std::uint64_t{1} << i)) members.push_back(i);
  }
  return IndividualSet(std::move(members));
}

IndividualSet map_set(const IndividualSet& s, const std::vector<Individual>& sigma) {
  std::vector<Individual> mapped;
  mapped.reserve(s.members().size());
  for (Individual u : s) mapped.push_back(sigma[static_cast<std::size_t>(u)]);
  return IndividualSet(std::move(mapped));
}

// All sets accepted by fn on this network, via the enumerator when one
// exists, otherwise by scanning the whole subset lattice.
std::vector<IndividualSet> member_sets(const CommunityFunctionHandle& fn,
                                       const PreferenceNetwork& net) {
  if (fn.enumerator) return fn.enumerator(net).items();
  const int n = net.size();
  if (n > 20) throw std::domain_error("member_sets: population too large for subset scan");
  std::vector<IndividualSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Individual> members;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) members.push_back(i);
    }
    IndividualSet s(std::move(members));
    if (fn.membership(net, s)) out.push_back(std::move(s));
  }
  return out;
}

void finalize(const CommunityFunctionHandle& fn, AxiomVerdict& verdict,
              Counterexample cex) {
  if (!recheck(fn, cex)) {
    throw std::logic_error("axiom harness: counterexample for " + cex.axiom +
                           " does not re-verify");
  }
  verdict.counterexample = std::move(cex);
}

void merge_into(AxiomSuiteReport& report, const AxiomVerdict& verdict) {
  AxiomSummary& summary = report.by_axiom[verdict.axiom];
  summary.trials += verdict.trials;
  if (!summary.counterexample && verdict.counterexample) {
    summary.counterexample = verdict.counterexample;
  }
}

}  // namespace

CommunityFunctionHandle intersect(const CommunityFunctionHandle& a,
                                  const CommunityFunctionHandle& b) {
  CommunityFunctionHandle out;
  out.name = "(" + a.name + "&" + b.name + ")";
  out.membership = [ma = a.membership, mb = b.membership](
                       const PreferenceNetwork& net, const IndividualSet& s) {
    return ma(net, s) && mb(net, s);
  };
  if (a.enumerator) {
    out.enumerator = [ea = a.enumerator, mb = b.membership](const PreferenceNetwork& net) {
      CommunitySet filtered;
      for (const IndividualSet& s : ea(net)) {
        if (mb(net, s)) filtered.insert(s);
      }
      return filtered;
    };
  } else if (b.enumerator) {
    out.enumerator = [eb = b.enumerator, ma = a.membership](const PreferenceNetwork& net) {
      CommunitySet filtered;
      for (const IndividualSet& s : eb(net)) {
        if (ma(net, s)) filtered.insert(s);
      }
      return filtered;
    };
  }
  return out;
}

CommunityFunctionHandle union_of(const CommunityFunctionHandle& a,
                                 const CommunityFunctionHandle& b) {
  CommunityFunctionHandle out;
  out.name = "(" + a.name + "|" + b.name + ")";
  out.membership = [ma = a.membership, mb = b.membership](
                       const PreferenceNetwork& net, const IndividualSet& s) {
    return ma(net, s) || mb(net, s);
  };
  if (a.enumerator && b.enumerator) {
    out.enumerator = [ea = a.enumerator, eb = b.enumerator](const PreferenceNetwork& net) {
      CommunitySet merged = ea(net);
      for (const IndividualSet& s : eb(net)) merged.insert(s);
      return merged;
    };
  }
  return out;
}

bool recheck(const CommunityFunctionHandle& fn, const Counterexample& cex) {
  if (cex.axiom == kAnonymity || cex.axiom == kEmbedding) {
    return fn.membership(cex.network, cex.set) !=
           fn.membership(*cex.second_network, *cex.second_set);
  }
  if (cex.axiom == kMonotonicity) {
    return fn.membership(cex.network, cex.set) &&
           !fn.membership(*cex.second_network, cex.set);
  }
  if (cex.axiom == kWorldCommunity) {
    return !fn.membership(cex.network, cex.set);
  }
  if (cex.axiom == kSaPrime) {
    if (cex.set.size() != 1 || !fn.membership(cex.network, cex.set)) return false;
    const Individual u = cex.set.min();
    return cex.network.order_of(u).rank_of(u) != 1;
  }
  if (cex.axiom == kSgs) {
    return fn.membership(cex.network, cex.set) &&
           !is_strongly_group_stable(cex.network, cex.set).outcome;
  }
  return false;
}

AxiomVerdict check_anonymity(const CommunityFunctionHandle& fn,
                             const PreferenceNetwork& net, int trials,
                             std::uint64_t seed) {
  AxiomVerdict verdict{kAnonymity, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  const int n = net.size();
  for (int t = 0; t < trials; ++t) {
    const std::vector<Individual> sigma = random_permutation(rng, n);
    const IndividualSet s = random_nonempty_subset(rng, n);
    const PreferenceNetwork relabeled = apply_permutation(net, sigma);
    const IndividualSet mapped = map_set(s, sigma);
    ++verdict.trials;
    if (fn.membership(net, s) != fn.membership(relabeled, mapped)) {
      finalize(fn, verdict,
               Counterexample{kAnonymity,
                              fn.name + " disagrees on relabeled pair, set " + show_set(s),
                              net, s, relabeled, mapped});
      break;
    }
  }
  return verdict;
}

PreferenceNetwork monotone_perturb(const PreferenceNetwork& net,
                                   const IndividualSet& s, std::mt19937_64& rng) {
  if (s.empty()) throw std::domain_error("monotone_perturb: empty set");
  if (s.min() < 0 || s.members().back() >= net.size()) {
    throw std::domain_error("monotone_perturb: individual out of range");
  }
  const int n = net.size();
  std::vector<OrderList> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) orders.push_back(net.order_of(u).order());

  const std::uint64_t swaps = bounded(rng, static_cast<std::uint64_t>(2 * n + 1));
  for (std::uint64_t t = 0; t < swaps; ++t) {
    // A swap candidate is a member sitting right below a non-member in some
    // member's order; swapping them preserves every member-held preference.
    std::vector<std::pair<Individual, int>> candidates;
    for (Individual w : s) {
      const OrderList& order = orders[static_cast<std::size_t>(w)];
      for (int pos = 1; pos < n; ++pos) {
        if (s.contains(order[static_cast<std::size_t>(pos)]) &&
            !s.contains(order[static_cast<std::size_t>(pos - 1)])) {
          candidates.emplace_back(w, pos);
        }
      }
    }
    if (candidates.empty()) break;
    const auto [w, pos] = candidates[static_cast<std::size_t>(bounded(rng, candidates.size()))];
    OrderList& order = orders[static_cast<std::size_t>(w)];
    std::swap(order[static_cast<std::size_t>(pos - 1)], order[static_cast<std::size_t>(pos)]);
  }
  return PreferenceNetwork::from_orders(orders);
}

AxiomVerdict check_monotonicity(const CommunityFunctionHandle& fn,
                                const PreferenceNetwork& net, int trials,
                                std::uint64_t seed) {
  AxiomVerdict verdict{kMonotonicity, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  const std::vector<IndividualSet> members = member_sets(fn, net);
  if (members.empty()) return verdict;
  for (int t = 0; t < trials; ++t) {
    const IndividualSet& s = members[static_cast<std::size_t>(bounded(rng, members.size()))];
    const PreferenceNetwork perturbed = monotone_perturb(net, s, rng);
    ++verdict.trials;
    if (!fn.membership(perturbed, s)) {
      finalize(fn, verdict,
               Counterexample{kMonotonicity,
                              fn.name + " loses " + show_set(s) + " after improvement",
                              net, s, perturbed, std::nullopt});
      break;
    }
  }
  return verdict;
}

AxiomVerdict check_embedding(const CommunityFunctionHandle& fn,
                             const PreferenceNetwork& net,
                             const IndividualSet& keep, int trials,
                             std::uint64_t seed) {
  AxiomVerdict verdict{kEmbedding, 0, std::nullopt};
  if (keep.empty()) throw std::domain_error("check_embedding: empty keep");
  if (!is_clique(net, keep)) {
    throw std::domain_error(
        "check_embedding: keep does not preserve ranks (not a clique)");
  }
  const RestrictResult restricted = restrict(net, keep);
  const int k = keep.size();

  const auto compare_subset = [&](std::uint64_t mask) {
    std::vector<Individual> inner_ids;
    std::vector<Individual> outer_ids;
    for (int i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        inner_ids.push_back(i);
        outer_ids.push_back(keep.members()[static_cast<std::size_t>(i)]);
      }
    }
    const IndividualSet inner(std::move(inner_ids));
    const IndividualSet outer(std::move(outer_ids));
    ++verdict.trials;
    if (fn.membership(net, outer) != fn.membership(restricted.network, inner)) {
      finalize(fn, verdict,
               Counterexample{kEmbedding,
                              fn.name + " disagrees across restriction to " +
                                  show_set(keep) + " on " + show_set(outer),
                              net, outer, restricted.network, inner});
      return false;
    }
    return true;
  };

  const std::uint64_t total = (std::uint64_t{1} << k) - 1;
  if (total <= std::max<std::uint64_t>(static_cast<std::uint64_t>(trials), 256)) {
    for (std::uint64_t mask = 1; mask <= total; ++mask) {
      if (!compare_subset(mask)) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      if (!compare_subset(1 + bounded(rng, total))) break;
    }
  }
  return verdict;
}

PreferenceNetwork embed_in_larger(const PreferenceNetwork& net, int extra,
                                  std::mt19937_64& rng) {
  if (extra < 1) throw std::domain_error("embed_in_larger: extra must be positive");
  const int n = net.size();
  const int total = n + extra;
  std::vector<OrderList> orders;
  orders.reserve(static_cast<std::size_t>(total));
  for (int u = 0; u < n; ++u) {
    OrderList order = net.order_of(u).order();
    std::vector<Individual> tail;
    for (int e = n; e < total; ++e) tail.push_back(e);
    for (std::size_t i = tail.size() - 1; i > 0; --i) {
      std::swap(tail[i], tail[static_cast<std::size_t>(bounded(rng, i + 1))]);
    }
    order.insert(order.end(), tail.begin(), tail.end());
    orders.push_back(std::move(order));
  }
  for (int e = n; e < total; ++e) orders.push_back(random_permutation(rng, total));
  return PreferenceNetwork::from_orders(orders);
}

AxiomVerdict check_wc(const CommunityFunctionHandle& fn,
                      const PreferenceNetwork& net) {
  AxiomVerdict verdict{kWorldCommunity, 1, std::nullopt};
  const IndividualSet everyone = IndividualSet::full(net.size());
  if (!fn.membership(net, everyone)) {
    finalize(fn, verdict,
             Counterexample{kWorldCommunity,
                            fn.name + " rejects the full population",
                            net, everyone, std::nullopt, std::nullopt});
  }
  return verdict;
}

AxiomVerdict check_sa_prime(const CommunityFunctionHandle& fn,
                            const PreferenceNetwork& net) {
  AxiomVerdict verdict{kSaPrime, 0, std::nullopt};
  for (Individual u = 0; u < net.size(); ++u) {
    const IndividualSet singleton{u};
    ++verdict.trials;
    if (fn.membership(net, singleton) && net.order_of(u).rank_of(u) != 1) {
      finalize(fn, verdict,
               Counterexample{kSaPrime,
                              fn.name + " accepts singleton " + show_set(singleton) +
                                  " whose member does not rank itself first",
                              net, singleton, std::nullopt, std::nullopt});
      break;
    }
  }
  return verdict;
}

AxiomVerdict check_sgs(const CommunityFunctionHandle& fn,
                       const PreferenceNetwork& net, int trials,
                       std::uint64_t seed) {
  AxiomVerdict verdict{kSgs, 0, std::nullopt};
  std::mt19937_64 rng(seed);
  const std::vector<IndividualSet> members = member_sets(fn, net);
  if (members.empty()) return verdict;

  const auto test = [&](const IndividualSet& s) {
    ++verdict.trials;
    if (!is_strongly_group_stable(net, s).outcome) {
      finalize(fn, verdict,
               Counterexample{kSgs,
                              fn.name + " accepts " + show_set(s) +
                                  " which is not strongly group-stable",
                              net, s, std::nullopt, std::nullopt});
      return false;
    }
    return true;
  };

  if (static_cast<int>(members.size()) <= std::max(trials, 64)) {
    for (const IndividualSet& s : members) {
      if (!test(s)) break;
    }
  } else {
    for (int t = 0; t < trials; ++t) {
      if (!test(members[static_cast<std::size_t>(bounded(rng, members.size()))])) break;
    }
  }
  return verdict;
}

bool AxiomSuiteReport::ok() const {
  for (const auto& [axiom, summary] : by_axiom) {
    if (!summary.ok()) return false;
  }
  return true;
}

int AxiomSuiteReport::total_trials() const {
  int total = 0;
  for (const auto& [axiom, summary] : by_axiom) total += summary.trials;
  return total;
}

AxiomSuiteReport check_axioms(const CommunityFunctionHandle& fn,
                              const std::vector<PreferenceNetwork>& corpus,
                              const AxiomCheckConfig& config) {
  AxiomSuiteReport report;
  report.function_name = fn.name;
  for (const char* axiom : {kAnonymity, kMonotonicity, kEmbedding, kWorldCommunity,
                            kSaPrime, kSgs}) {
    report.by_axiom[axiom] = AxiomSummary{};
  }

  std::mt19937_64 master(config.seed);
  for (const PreferenceNetwork& net : corpus) {
    const std::uint64_t net_seed = master();
    const auto found = [&](const char* axiom) {
      return report.by_axiom[axiom].counterexample.has_value();
    };

    if (!found(kAnonymity)) {
      merge_into(report, check_anonymity(fn, net, config.trials_per_network, net_seed));
    }
    if (!found(kMonotonicity)) {
      merge_into(report, check_monotonicity(fn, net, config.trials_per_network, net_seed + 1));
    }
    if (!found(kEmbedding)) {
      std::mt19937_64 keep_rng(net_seed + 2);
      // Premise-satisfying keeps are exactly the cliques of the network.
      const CommunitySet cliques = enumerate_cliques(net).cliques;
      int used = 0;
      for (const IndividualSet& keep : cliques) {
        if (used >= config.keeps_per_network) break;
        if (keep.size() == net.size()) continue;  // restriction is the identity
        ++used;
        merge_into(report, check_embedding(fn, net, keep, config.trials_per_network,
                                           keep_rng()));
        if (found(kEmbedding)) break;
      }
      // The other direction: the network itself embedded rank-preserved in a
      // random host, compared over subsets of the original population.
      if (!found(kEmbedding)) {
        const int extra = 1 + static_cast<int>(bounded(keep_rng, 3));
        const PreferenceNetwork host = embed_in_larger(net, extra, keep_rng);
        merge_into(report, check_embedding(fn, host, IndividualSet::full(net.size()),
                                           config.trials_per_network, keep_rng()));
      }
    }
    if (!found(kWorldCommunity)) merge_into(report, check_wc(fn, net));
    if (!found(kSaPrime)) merge_into(report, check_sa_prime(fn, net));
    if (!found(kSgs)) {
      merge_into(report, check_sgs(fn, net, config.trials_per_network, net_seed + 3));
    }
  }
  return report;
}

AxiomSuiteReport check_intersection_lemma(const CommunityFunctionHandle& fn,
                                          const std::vector<PreferenceNetwork>& corpus,
                                          const AxiomCheckConfig& config) {
  return check_axioms(intersect(fn, builtin::scomp()), corpus, config);
}

std::vector<PreferenceNetwork> build_corpus(const CorpusSpec& spec) {
  std::mt19937_64 master(spec.seed);
  std::vector<PreferenceNetwork> corpus;
  for (const auto& [n, count] : spec.sizes) {
    for (int i = 0; i < count; ++i) corpus.push_back(uniform_random(n, master()));
  }
  return corpus;
}

OracleAgreementReport run_oracle_agreement(const std::vector<PreferenceNetwork>& corpus,
                                           const OracleBudget& budget,
                                           std::uint64_t seed) {
  OracleAgreementReport report;
  std::mt19937_64 rng(seed);

  for (std::size_t net_index = 0; net_index < corpus.size(); ++net_index) {
    const PreferenceNetwork& net = corpus[net_index];
    const int n = net.size();
    if (n > budget.max_n) {
      throw BudgetError("run_oracle_agreement: corpus network of size " +
                        std::to_string(n) + " exceeds oracle budget max_n=" +
                        std::to_string(budget.max_n));
    }
    const auto fail = [&](const std::string& what) {
      report.failures.push_back("network #" + std::to_string(net_index) + " (n=" +
                                std::to_string(n) + "): " + what);
    };

    // Group preference: fast greedy vs bijection search on random pairs.
    for (int t = 0; t < 10; ++t) {
      if (n < 2) break;
      const std::vector<Individual> perm = random_permutation(rng, n);
      const int k = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n / 2)));
      const IndividualSet gp(std::vector<Individual>(perm.begin(), perm.begin() + k));
      const IndividualSet g(std::vector<Individual>(perm.begin() + k, perm.begin() + 2 * k));
      const Individual judge = static_cast<Individual>(bounded(rng, static_cast<std::uint64_t>(n)));
      ++report.group_preference_checks;
      if (group_prefers(net.order_of(judge), gp, g) !=
          brute_group_prefers(net.order_of(judge), gp, g, budget)) {
        fail("group preference mismatch on " + show_set(gp) + " vs " + show_set(g));
      }
    }

    // Clique enumeration vs the full subset scan.
    ++report.clique_checks;
    if (!(enumerate_cliques(net).cliques == brute_cliques(net, budget))) {
      fail("clique enumeration mismatch");
    }

    // Every subset: fast decision vs definition, plus the implication chain.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Individual> members;
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) members.push_back(i);
      }
      const IndividualSet s(std::move(members));

      const bool fast = is_strongly_group_stable(net, s).outcome;
      const bool slow = brute_strongly_group_stable(net, s, budget);
      ++report.sgs_checks;
      if (fast != slow) fail("sgs mismatch on " + show_set(s));

      const bool gs = brute_group_stable(net, s, budget);
      ++report.implication_checks;
      if (slow && !gs) fail("sgs set " + show_set(s) + " is not group-stable");
      if (gs && s.size() >= 2 && !brute_self_approving(net, s, budget)) {
        fail("group-stable set " + show_set(s) + " is not self-approving");
      }
    }
  }
  return report;
}

namespace builtin {

CommunityFunctionHandle cliq() {
  CommunityFunctionHandle fn;
  fn.name = "cliq";
  fn.membership = [](const PreferenceNetwork& net, const IndividualSet& s) {
    return is_clique(net, s);
  };
  fn.enumerator = [](const PreferenceNetwork& net) {
    return enumerate_cliques(net).cliques;
  };
  return fn;
}

CommunityFunctionHandle scomp() {
  CommunityFunctionHandle fn;
  fn.name = "scomp";
  fn.membership = [](const PreferenceNetwork& net, const IndividualSet& s) {
    return in_scomp(net, s);
  };
  return fn;
}

CommunityFunctionHandle grow(MajorityRule rule) {
  CommunityFunctionHandle fn;
  fn.name = rule == MajorityRule::strict ? "grow" : "grow-weak";
  fn.enumerator = [rule](const PreferenceNetwork& net) {
    CommunitySet out;
    for (const IndividualSet& s : clique_growing(net, rule).communities) out.insert(s);
    return out;
  };
  fn.membership = [enumerate = fn.enumerator](const PreferenceNetwork& net,
                                              const IndividualSet& s) {
    return enumerate(net).contains(s);
  };
  return fn;
}

CommunityFunctionHandle grow_scomp(MajorityRule rule) {
  CommunityFunctionHandle fn;
  fn.name = rule == MajorityRule::strict ? "grow-scomp" : "grow-scomp-weak";
  fn.enumerator = [rule](const PreferenceNetwork& net) {
    return prefnet::grow_scomp(net, rule);
  };
  fn.membership = [rule](const PreferenceNetwork& net, const IndividualSet& s) {
    return prefnet::grow_scomp(net, rule).contains(s);
  };
  return fn;
}

CommunityFunctionHandle cliq_g(int slack) {
  CommunityFunctionHandle fn;
  fn.name = "cliq-g" + std::to_string(slack);
  fn.membership = [slack](const PreferenceNetwork& net, const IndividualSet& s) {
    return is_clique_g(net, s, [slack](int) { return slack; });
  };
  return fn;
}

CommunityFunctionHandle harmonious(double lambda) {
  CommunityFunctionHandle fn;
  std::ostringstream name;
  name << "harmonious" << lambda;
  fn.name = name.str();
  fn.membership = [lambda](const PreferenceNetwork& net, const IndividualSet& s) {
    return is_harmonious(net, s, lambda);
  };
  return fn;
}

CommunityFunctionHandle planted_label() {
  CommunityFunctionHandle fn;
  fn.name = "planted-label";
  fn.membership = [](const PreferenceNetwork&, const IndividualSet& s) {
    return s.contains(0);
  };
  return fn;
}

CommunityFunctionHandle planted_proper() {
  CommunityFunctionHandle fn;
  fn.name = "planted-proper";
  fn.membership = [](const PreferenceNetwork& net, const IndividualSet& s) {
    return !s.empty() && s.size() < net.size();
  };
  return fn;
}

CommunityFunctionHandle planted_parity() {
  CommunityFunctionHandle fn;
  fn.name = "planted-parity";
  fn.membership = [](const PreferenceNetwork& net, const IndividualSet& s) {
    long sum = 0;
    for (Individual w : s) {
      for (Individual u : s) sum += net.order_of(w).rank_of(u);
    }
    return sum % 2 == 0;
  };
  return fn;
}

CommunityFunctionHandle planted_all() {
  CommunityFunctionHandle fn;
  fn.name = "planted-all";
  fn.membership = [](const PreferenceNetwork&, const IndividualSet& s) {
    return !s.empty();
  };
  return fn;
}

std::vector<std::string> default_names() {
  return {"cliq", "scomp", "grow-scomp", "cliq-g1-scomp", "harmonious05-scomp"};
}

std::vector<std::string> planted_names() {
  return {"planted-label", "planted-proper", "planted-parity", "planted-all"};
}

std::optional<CommunityFunctionHandle> by_name(const std::string& name) {
  if (name == "cliq") return cliq();
  if (name == "scomp") return scomp();
  if (name == "grow") return grow(MajorityRule::strict);
  if (name == "grow-weak") return grow(MajorityRule::weak);
  if (name == "grow-scomp") return grow_scomp(MajorityRule::strict);
  if (name == "grow-scomp-weak") return grow_scomp(MajorityRule::weak);
  if (name == "cliq-g1-scomp") {
    CommunityFunctionHandle fn = intersect(cliq_g(1), scomp());
    fn.name = "cliq-g1-scomp";
    return fn;
  }
  if (name == "harmonious05-scomp") {
    CommunityFunctionHandle fn = intersect(harmonious(0.5), scomp());
    fn.name = "harmonious05-scomp";
    return fn;
  }
  if (name == "planted-label") return planted_label();
  if (name == "planted-proper") return planted_proper();
  if (name == "planted-parity") return planted_parity();
  if (name == "planted-all") return planted_all();
  return std::nullopt;
}

}  // namespace builtin

}  // namespace prefnet
