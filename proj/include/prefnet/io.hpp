/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "prefnet/core.hpp"

namespace prefnet {

// Network file format (all ids 1-based):
//   line 1:        population size n
//   lines 2..n+1:  individual i's order, a permutation of 1..n, most
//                  preferred first, space separated
// Lines starting with '#' and blank lines are skipped. The writer emits the
// canonical form: no comments, single spaces, one trailing newline.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

PreferenceNetwork read_network(std::istream& in);
PreferenceNetwork read_network_file(const std::string& path);
void write_network(std::ostream& out, const PreferenceNetwork& net);
std::string to_network_string(const PreferenceNetwork& net);

// Community list format: one community per line, sorted 1-based ids, space
// separated, lines in canonical order (size, then lexicographic).
void write_community_list(std::ostream& out, const std::vector<IndividualSet>& communities);
std::string to_community_list_string(const std::vector<IndividualSet>& communities);
std::vector<IndividualSet> read_community_list(std::istream& in);

// Comma-separated 1-based ids ("1,2,3") to an internal set. Rejects
// duplicates, malformed tokens and ids outside [1, n].
IndividualSet parse_id_list(const std::string& text, int n);

// A single permutation line (1-based) from a file, e.g. a base order for the
// profile generator.
OrderList read_order_file(const std::string& path, int n);

}  // namespace prefnet
