/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prefnet/community.hpp"
#include "prefnet/core.hpp"
#include "prefnet/oracles.hpp"

namespace prefnet {

// A named community function: a membership predicate plus, when one exists,
// a polynomial enumerator. Where an enumerator exists it must agree with the
// membership predicate.
struct CommunityFunctionHandle {
  std::string name;
  std::function<bool(const PreferenceNetwork&, const IndividualSet&)> membership;
  std::function<CommunitySet(const PreferenceNetwork&)> enumerator;  // may be empty
};

CommunityFunctionHandle intersect(const CommunityFunctionHandle& a,
                                  const CommunityFunctionHandle& b);
CommunityFunctionHandle union_of(const CommunityFunctionHandle& a,
                                 const CommunityFunctionHandle& b);

// A found violation, stored with everything needed to re-verify it by
// direct membership evaluation.
struct Counterexample {
  std::string axiom;
  std::string detail;
  PreferenceNetwork network;
  IndividualSet set;
  std::optional<PreferenceNetwork> second_network;
  std::optional<IndividualSet> second_set;
};

struct AxiomVerdict {
  std::string axiom;
  int trials = 0;
  std::optional<Counterexample> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

// Re-evaluates a stored counterexample from its data alone.
bool recheck(const CommunityFunctionHandle& fn, const Counterexample& cex);

// The axiom checks are falsification under a trial budget, never
// verification: a clean verdict means no counterexample was found.

// Relabeling invariance: membership must agree between (net, S) and the
// sigma-relabeled pair, for random sigma and random S.
AxiomVerdict check_anonymity(const CommunityFunctionHandle& fn,
                             const PreferenceNetwork& net, int trials,
                             std::uint64_t seed);

// A random profile change that keeps every preference a member of s holds
// (in members' orders) intact while possibly improving members' standings:
// repeatedly swaps a member upward past an immediately preceding
// non-member in some member's order.
PreferenceNetwork monotone_perturb(const PreferenceNetwork& net,
                                   const IndividualSet& s, std::mt19937_64& rng);

// Communities must survive monotone_perturb.
AxiomVerdict check_monotonicity(const CommunityFunctionHandle& fn,
                                const PreferenceNetwork& net, int trials,
                                std::uint64_t seed);

// Membership over subsets of keep must agree between the network and its
// restriction to keep. The embedding premise demands that kept ranks are
// unchanged, which holds exactly when keep occupies the top of every kept
// member's order, i.e. when keep is a clique; other keeps are rejected.
AxiomVerdict check_embedding(const CommunityFunctionHandle& fn,
                             const PreferenceNetwork& net,
                             const IndividualSet& keep, int trials,
                             std::uint64_t seed);

// Random host network in which net sits rank-preserved: original individuals
// keep their ids and order their own population first, extras follow in
// random order, and each extra individual ranks everyone at random.
PreferenceNetwork embed_in_larger(const PreferenceNetwork& net, int extra,
                                  std::mt19937_64& rng);

// The full population must be a community.
AxiomVerdict check_wc(const CommunityFunctionHandle& fn,
                      const PreferenceNetwork& net);

// Every singleton community's member must rank itself first.
AxiomVerdict check_sa_prime(const CommunityFunctionHandle& fn,
                            const PreferenceNetwork& net);

// Every community must pass the strong group stability decision.
AxiomVerdict check_sgs(const CommunityFunctionHandle& fn,
                       const PreferenceNetwork& net, int trials,
                       std::uint64_t seed);

struct AxiomCheckConfig {
  int trials_per_network = 6;
  int keeps_per_network = 2;
  std::uint64_t seed = 1;
};

// Aggregated result of one axiom across a corpus.
struct AxiomSummary {
  int trials = 0;
  std::optional<Counterexample> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

struct AxiomSuiteReport {
  std::string function_name;
  std::map<std::string, AxiomSummary> by_axiom;
  bool ok() const;
  int total_trials() const;
};

// Runs all six checks for fn over every network in the corpus.
AxiomSuiteReport check_axioms(const CommunityFunctionHandle& fn,
                              const std::vector<PreferenceNetwork>& corpus,
                              const AxiomCheckConfig& config);

// Runs all six checks on fn intersected with scomp.
AxiomSuiteReport check_intersection_lemma(const CommunityFunctionHandle& fn,
                                          const std::vector<PreferenceNetwork>& corpus,
                                          const AxiomCheckConfig& config);

// Seeded corpus of uniformly random networks, count networks per size.
struct CorpusSpec {
  std::vector<std::pair<int, int>> sizes;  // (n, count)
  std::uint64_t seed = 1;
};
std::vector<PreferenceNetwork> build_corpus(const CorpusSpec& spec);

// Cross-checks the fast paths against the exhaustive oracles over a corpus:
// group preference on random set pairs, the strong group stability decision
// and clique enumeration on every subset, plus the implication chain
// (strongly group-stable implies group-stable implies self-approving for
// sets of two or more).
struct OracleAgreementReport {
  long group_preference_checks = 0;
  long sgs_checks = 0;
  long clique_checks = 0;
  long implication_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
OracleAgreementReport run_oracle_agreement(const std::vector<PreferenceNetwork>& corpus,
                                           const OracleBudget& budget,
                                           std::uint64_t seed);

namespace builtin {

CommunityFunctionHandle cliq();
CommunityFunctionHandle scomp();
CommunityFunctionHandle grow(MajorityRule rule);
CommunityFunctionHandle grow_scomp(MajorityRule rule);
CommunityFunctionHandle cliq_g(int slack);
CommunityFunctionHandle harmonious(double lambda);

// Deliberate violators used to prove the harness can find counterexamples.
CommunityFunctionHandle planted_label();    // membership depends on id 0
CommunityFunctionHandle planted_proper();   // rejects the full population
CommunityFunctionHandle planted_parity();   // flips under any upward swap
CommunityFunctionHandle planted_all();      // accepts every non-empty set

// Handles validated by default: cliq, scomp, grow-scomp, cliq-g1-scomp,
// harmonious05-scomp.
std::vector<std::string> default_names();
std::vector<std::string> planted_names();
std::optional<CommunityFunctionHandle> by_name(const std::string& name);

}  // namespace builtin

}  // namespace prefnet
