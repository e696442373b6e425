/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include <doctest.h>

#include <sstream>

#include "prefnet/io.hpp"
#include "support.hpp"

using namespace prefnet;
using testsupport::set1;
using testsupport::village6;

namespace {

PreferenceNetwork parse(const std::string& text) {
  std::istringstream in(text);
  return read_network(in);
}

int parse_error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("network files round-trip") {
  const std::string canonical =
      "6\n"
      "1 2 3 4 5 6\n"
      "1 2 3 4 5 6\n"
      "1 2 3 4 5 6\n"
      "4 5 6 1 2 3\n"
      "4 5 6 1 2 3\n"
      "4 5 6 1 2 3\n";
  const PreferenceNetwork net = parse(canonical);
  CHECK(net == village6());
  CHECK(to_network_string(net) == canonical);

  // Comments and stray whitespace normalize on the first round-trip and are
  // stable afterwards.
  const std::string messy =
      "# a handy header\n"
      "\n"
      "6\n"
      "  1 2  3 4 5 6\n"
      "1 2 3 4 5 6\n"
      "# families\n"
      "1 2 3 4 5 6\n"
      "4 5 6 1 2 3\n"
      "4 5 6 1 2 3\n"
      "4\t5 6 1 2 3\n";
  const std::string once = to_network_string(parse(messy));
  CHECK(once == canonical);
  CHECK(to_network_string(parse(once)) == once);
}

TEST_CASE("parser diagnostics carry line numbers") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("0\n") == 1);
  CHECK(parse_error_line("two\n") == 1);
  CHECK(parse_error_line("2\n1 2\n") == 3);            // missing second order
  CHECK(parse_error_line("2\n1 2\n1 1\n") == 3);       // duplicate id
  CHECK(parse_error_line("2\n1 2\n1 3\n") == 3);       // out of range
  CHECK(parse_error_line("2\n1 2\n1\n") == 3);         // too short
  CHECK(parse_error_line("2\n1 2\n1 2 1\n") == 3);     // too long
  CHECK(parse_error_line("2\n1 2\n1 x\n") == 3);       // bad token
  CHECK(parse_error_line("2\n1 2\n2 1\n3 1 2\n") == 4);  // trailing content

  try {
    (void)parse("2\n1 2\n1 9\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
}

TEST_CASE("community list format") {
  const std::vector<IndividualSet> communities = {set1({1}), set1({4}), set1({1, 2, 3})};
  const std::string text = to_community_list_string(communities);
  CHECK(text == "1\n4\n1 2 3\n");

  std::istringstream in(text);
  CHECK(read_community_list(in) == communities);
}

TEST_CASE("id list parsing") {
  CHECK(parse_id_list("1,2,3", 6) == set1({1, 2, 3}));
  CHECK(parse_id_list("4", 6) == set1({4}));
  CHECK_THROWS_AS(parse_id_list("0", 6), std::domain_error);
  CHECK_THROWS_AS(parse_id_list("7", 6), std::domain_error);
  CHECK_THROWS_AS(parse_id_list("1,1", 6), std::domain_error);
  CHECK_THROWS_AS(parse_id_list("a", 6), std::domain_error);
  CHECK_THROWS_AS(parse_id_list("", 6), std::domain_error);
}
