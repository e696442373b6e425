/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "prefnet/core.hpp"

namespace testsupport {

// 1-based ids, as they appear in network files.
inline prefnet::IndividualSet set1(std::initializer_list<int> ids) {
  std::vector<prefnet::Individual> members;
  members.reserve(ids.size());
  for (int id : ids) members.push_back(id - 1);
  return prefnet::IndividualSet(std::move(members));
}

// Six individuals in two tight families: 1,2,3 share the order
// [1 2 3 4 5 6] and 4,5,6 share [4 5 6 1 2 3].
inline prefnet::PreferenceNetwork village6() {
  return prefnet::PreferenceNetwork::from_orders({{0, 1, 2, 3, 4, 5},
                                                  {0, 1, 2, 3, 4, 5},
                                                  {0, 1, 2, 3, 4, 5},
                                                  {3, 4, 5, 0, 1, 2},
                                                  {3, 4, 5, 0, 1, 2},
                                                  {3, 4, 5, 0, 1, 2}});
}

// Five individuals with two overlapping grown communities {1,2,3} and
// {1,3,4} under the weak rule. Individual 5 is everyone's last choice and
// ranks itself last.
inline prefnet::PreferenceNetwork overlap5() {
  return prefnet::PreferenceNetwork::from_orders({{0, 1, 2, 3, 4},
                                                  {1, 0, 2, 3, 4},
                                                  {2, 3, 0, 1, 4},
                                                  {3, 2, 0, 1, 4},
                                                  {0, 1, 2, 3, 4}});
}

// Upper critical value of the chi-square distribution by the
// Wilson-Hilferty approximation; z is the standard normal quantile.
inline double chi_square_critical(int df, double z) {
  const double d = static_cast<double>(df);
  const double term = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
  return d * term * term * term;
}

inline double chi_square_statistic(const std::vector<long>& observed, double expected) {
  double stat = 0.0;
  for (long o : observed) {
    const double diff = static_cast<double>(o) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command and captures stdout (stderr is merged in).
inline CliResult run_command(const std::string& command) {
  CliResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

// Path of the CLI binary under test, from the environment.
inline std::string cli_path() {
  const char* path = std::getenv("PREFNET_CLI");
  if (path == nullptr || *path == '\0') {
    throw std::runtime_error("PREFNET_CLI is not set; point it at the prefnet binary");
  }
  return path;
}

}  // namespace testsupport
