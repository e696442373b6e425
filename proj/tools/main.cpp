/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefnet/community.hpp"
#include "prefnet/core.hpp"
#include "prefnet/generators.hpp"
#include "prefnet/grow.hpp"
#include "prefnet/harness.hpp"
#include "prefnet/io.hpp"
#include "prefnet/oracles.hpp"
#include "prefnet/stability.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

json set_to_json(const prefnet::IndividualSet& s) {
  json out = json::array();
  for (prefnet::Individual u : s) out.push_back(u + 1);
  return out;
}

std::string show_set(const prefnet::IndividualSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s.members()[i] + 1);
  }
  return out + "}";
}

struct CheckArgs {
  std::string kind;
  std::string file;
  std::string set_text;
  std::string rule = "strict";
  double lambda = -1.0;
  std::optional<int> g_const;
  std::optional<double> g_linear;
};

prefnet::MajorityRule parse_rule(const std::string& rule) {
  if (rule == "strict") return prefnet::MajorityRule::strict;
  if (rule == "weak") return prefnet::MajorityRule::weak;
  throw std::domain_error("unknown rule '" + rule + "'");
}

int run_check(const CheckArgs& args) {
  const prefnet::PreferenceNetwork net = prefnet::read_network_file(args.file);
  const prefnet::IndividualSet set = prefnet::parse_id_list(args.set_text, net.size());

  bool result = false;
  std::optional<prefnet::SgsWitness> witness;
  if (args.kind == "clique") {
    result = prefnet::is_clique(net, set);
  } else if (args.kind == "sgs") {
    const prefnet::SgsTrace trace = prefnet::is_strongly_group_stable(net, set);
    result = trace.outcome;
    witness = trace.witness;
  } else if (args.kind == "sa-prime") {
    result = prefnet::is_sa_prime(net, set);
  } else if (args.kind == "scomp") {
    result = prefnet::in_scomp(net, set);
  } else if (args.kind == "harmon") {
    result = prefnet::is_harmon(net, set, parse_rule(args.rule));
  } else if (args.kind == "harmonious") {
    if (args.lambda < 0.0) throw std::domain_error("harmonious requires --lambda");
    result = prefnet::is_harmonious(net, set, args.lambda);
  } else if (args.kind == "cliq-g") {
    if (args.g_const.has_value() == args.g_linear.has_value()) {
      throw std::domain_error("cliq-g requires exactly one of --g-const, --g-linear");
    }
    prefnet::SlackFn g;
    if (args.g_const) {
      const int c = *args.g_const;
      if (c < 0) throw std::domain_error("--g-const must be non-negative");
      g = [c](int) { return c; };
    } else {
      const double alpha = *args.g_linear;
      if (alpha < 0.0) throw std::domain_error("--g-linear must be non-negative");
      g = [alpha](int k) { return static_cast<int>(alpha * k); };
    }
    result = prefnet::is_clique_g(net, set, g);
  } else {
    throw std::domain_error("unknown check kind '" + args.kind + "'");
  }

  std::cout << args.kind << " " << args.file << " set=" << show_set(set) << ": "
            << (result ? "true" : "false") << "\n";
  if (witness) {
    std::cout << "witness: seed=" << witness->seed + 1 << " stuck="
              << show_set(witness->stuck) << "\n";
  }

  json line = {{"cmd", "check"},
               {"kind", args.kind},
               {"file", args.file},
               {"set", set_to_json(set)},
               {"result", result}};
  if (witness) {
    line["witness"] = {{"seed", witness->seed + 1}, {"stuck", set_to_json(witness->stuck)}};
  }
  std::cout << line.dump() << "\n";
  return result ? kExitTrue : kExitFalse;
}

struct GrowArgs {
  std::string file;
  std::string rule = "strict";
  bool filter_scomp = false;
  bool enumerate = false;
  std::optional<std::uint64_t> sample_seed;
};

int run_grow(const GrowArgs& args) {
  const prefnet::PreferenceNetwork net = prefnet::read_network_file(args.file);
  const prefnet::MajorityRule rule = parse_rule(args.rule);

  prefnet::CommunitySet communities;
  if (args.filter_scomp) {
    communities = prefnet::grow_scomp(net, rule);
  } else {
    for (const prefnet::IndividualSet& s : prefnet::clique_growing(net, rule).communities) {
      communities.insert(s);
    }
  }

  if (args.sample_seed) {
    std::mt19937_64 rng(*args.sample_seed);
    const std::size_t index =
        static_cast<std::size_t>(prefnet::bounded(rng, communities.items().size()));
    prefnet::write_community_list(std::cout, {communities.items()[index]});
  } else {
    prefnet::write_community_list(std::cout, communities.items());
  }
  return kExitTrue;
}

struct GenerateArgs {
  std::string kind;
  int size = 0;
  std::uint64_t seed = 1;
  std::string sigma_file;
};

int run_generate(const GenerateArgs& args) {
  if (args.size < 1) throw std::domain_error("size must be positive");
  const prefnet::PreferenceNetwork net = [&] {
    if (args.kind == "get-profile") {
      if (!args.sigma_file.empty()) {
        return prefnet::get_profile(args.size,
                                    prefnet::read_order_file(args.sigma_file, args.size));
      }
      return prefnet::get_profile(args.size);
    }
    if (args.kind == "hero-sidekick") return prefnet::hero_sidekick(args.size);
    if (args.kind == "random") return prefnet::uniform_random(args.size, args.seed);
    throw std::domain_error("unknown generate kind '" + args.kind + "'");
  }();
  prefnet::write_network(std::cout, net);
  return kExitTrue;
}

struct ValidateArgs {
  std::string corpus_file;
  std::string functions = "default";
  int trials = 5;
};

json counterexample_to_json(const prefnet::Counterexample& cex) {
  return {{"axiom", cex.axiom}, {"detail", cex.detail}, {"set", set_to_json(cex.set)}};
}

int run_validate(const ValidateArgs& args) {
  prefnet::CorpusSpec spec;
  spec.seed = 20260809;
  spec.sizes = {{1, 6}, {2, 12}, {3, 40}, {4, 40}, {5, 30}, {6, 16}, {7, 8}};
  int trials = args.trials;

  if (!args.corpus_file.empty()) {
    std::ifstream in(args.corpus_file);
    if (!in) throw std::domain_error("cannot open corpus config '" + args.corpus_file + "'");
    const json config = json::parse(in);
    if (config.contains("seed")) spec.seed = config["seed"].get<std::uint64_t>();
    if (config.contains("trials")) trials = config["trials"].get<int>();
    if (config.contains("sizes")) {
      spec.sizes.clear();
      for (const auto& entry : config["sizes"]) {
        spec.sizes.emplace_back(entry.at("n").get<int>(), entry.at("count").get<int>());
      }
    }
  }

  const prefnet::OracleBudget budget;
  for (const auto& [n, count] : spec.sizes) {
    if (n < 1 || count < 0) throw std::domain_error("corpus sizes must be positive");
    if (n > budget.max_n) {
      throw prefnet::BudgetError("corpus requests n=" + std::to_string(n) +
                                 " beyond oracle budget max_n=" +
                                 std::to_string(budget.max_n));
    }
  }

  std::vector<std::string> names;
  if (args.functions == "default" || args.functions == "all") {
    names = prefnet::builtin::default_names();
    if (args.functions == "all") {
      for (const std::string& planted : prefnet::builtin::planted_names()) {
        names.push_back(planted);
      }
    }
  } else {
    std::istringstream in(args.functions);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) names.push_back(token);
    }
  }

  const std::vector<prefnet::PreferenceNetwork> corpus = prefnet::build_corpus(spec);
  std::cout << "corpus: " << corpus.size() << " networks\n";

  json report;
  bool all_ok = true;

  const prefnet::OracleAgreementReport oracle =
      prefnet::run_oracle_agreement(corpus, budget, spec.seed + 1);
  std::cout << "oracle agreement: " << (oracle.ok() ? "ok" : "FAILED") << " ("
            << oracle.sgs_checks << " sgs, " << oracle.clique_checks << " clique, "
            << oracle.group_preference_checks << " group-preference, "
            << oracle.implication_checks << " implication checks)\n";
  for (const std::string& failure : oracle.failures) {
    std::cout << "  disagreement: " << failure << "\n";
  }
  all_ok = all_ok && oracle.ok();
  report["oracle_agreement"] = {{"ok", oracle.ok()},
                                {"sgs_checks", oracle.sgs_checks},
                                {"clique_checks", oracle.clique_checks},
                                {"group_preference_checks", oracle.group_preference_checks},
                                {"implication_checks", oracle.implication_checks},
                                {"failures", oracle.failures}};

  report["functions"] = json::array();
  for (const std::string& name : names) {
    const auto handle = prefnet::builtin::by_name(name);
    if (!handle) throw std::domain_error("unknown community function '" + name + "'");

    prefnet::AxiomCheckConfig config;
    config.trials_per_network = trials;
    config.seed = spec.seed + 2;
    const prefnet::AxiomSuiteReport suite = prefnet::check_axioms(*handle, corpus, config);

    json fn_json = {{"function", name}, {"ok", suite.ok()}, {"axioms", json::object()}};
    std::cout << name << ": " << (suite.ok() ? "ok" : "FAILED") << " ("
              << suite.total_trials() << " trials)\n";
    for (const auto& [axiom, summary] : suite.by_axiom) {
      json axiom_json = {{"trials", summary.trials}};
      if (summary.counterexample) {
        axiom_json["counterexample"] = counterexample_to_json(*summary.counterexample);
        std::cout << "  " << axiom << ": counterexample -- "
                  << summary.counterexample->detail << "\n";
      } else {
        axiom_json["counterexample"] = nullptr;
      }
      fn_json["axioms"][axiom] = axiom_json;
    }
    report["functions"].push_back(fn_json);
    all_ok = all_ok && suite.ok();
  }

  report["ok"] = all_ok;
  std::cout << report.dump() << "\n";
  return all_ok ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prefnet: group-stable community detection over preference networks"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Decide membership of a set under one community predicate");
  check->add_option("kind", check_args.kind,
                    "One of clique|sgs|sa-prime|scomp|harmon|harmonious|cliq-g")
      ->required();
  check->add_option("network", check_args.file, "Network file")->required();
  check->add_option("--set", check_args.set_text, "Comma-separated 1-based ids")->required();
  check->add_option("--rule", check_args.rule, "Majority rule for harmon: strict|weak");
  check->add_option("--lambda", check_args.lambda, "Fraction for harmonious, in [0,1]");
  check->add_option("--g-const", check_args.g_const, "Constant rank slack for cliq-g");
  check->add_option("--g-linear", check_args.g_linear, "Linear rank slack factor for cliq-g");

  GrowArgs grow_args;
  CLI::App* grow = app.add_subcommand("grow", "Grow communities from cliques");
  grow->add_option("network", grow_args.file, "Network file")->required();
  grow->add_option("--rule", grow_args.rule, "Majority rule: strict|weak");
  grow->add_flag("--filter-scomp", grow_args.filter_scomp,
                 "Keep only strongly group-stable, sa-prime communities");
  grow->add_flag("--enumerate", grow_args.enumerate,
                 "Print the full canonical list (the default behaviour)");
  grow->add_option("--sample", grow_args.sample_seed,
                   "Print one community sampled uniformly with this seed");

  GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand("generate", "Emit a generated network");
  generate->add_option("kind", generate_args.kind,
                       "One of get-profile|hero-sidekick|random")
      ->required();
  generate->add_option("size", generate_args.size,
                       "Population size (pair count for hero-sidekick)")
      ->required();
  generate->add_option("--seed", generate_args.seed, "Seed for random generation");
  generate->add_option("--sigma", generate_args.sigma_file,
                       "File with a base order for get-profile");

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Run oracle agreement and axiom falsification suites");
  validate->add_option("--corpus", validate_args.corpus_file,
                       "JSON corpus config: {seed, trials, sizes:[{n,count}]}");
  validate->add_option("--functions", validate_args.functions,
                       "Comma-separated function names, or default|all");
  validate->add_option("--trials", validate_args.trials, "Trials per axiom per network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (grow->parsed()) return run_grow(grow_args);
    if (generate->parsed()) return run_generate(generate_args);
    if (validate->parsed()) return run_validate(validate_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
