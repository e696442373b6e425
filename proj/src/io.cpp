/*
 * Copyright 2026 the prefnet authors
 * License: Apache License 2.0
 */
#include "prefnet/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace prefnet {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<long> parse_ints(const std::string& line, int line_no) {
  std::vector<long> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "invalid token '" + token + "'");
    }
    if (used != token.size()) {
      throw ParseError(line_no, "invalid token '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

// Reads the next data line, skipping blanks and comments. Returns false at
// end of input.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank_or_comment(line)) return true;
  }
  return false;
}

OrderList parse_permutation_line(const std::string& line, int line_no, int n) {
  const std::vector<long> values = parse_ints(line, line_no);
  if (static_cast<int>(values.size()) != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) + " ids, got " +
                                  std::to_string(values.size()));
  }
  OrderList order;
  order.reserve(values.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long value : values) {
    if (value < 1 || value > n) {
      throw ParseError(line_no, "id " + std::to_string(value) + " out of range [1," +
                                    std::to_string(n) + "]");
    }
    const int id = static_cast<int>(value) - 1;
    if (seen[static_cast<std::size_t>(id)]) {
      throw ParseError(line_no, "duplicate id " + std::to_string(value));
    }
    seen[static_cast<std::size_t>(id)] = 1;
    order.push_back(id);
  }
  return order;
}

}  // namespace

PreferenceNetwork read_network(std::istream& in) {
  std::string line;
  int line_no = 0;

  if (!next_data_line(in, line, line_no)) {
    throw ParseError(line_no + 1, "missing population size");
  }
  const std::vector<long> header = parse_ints(line, line_no);
  if (header.size() != 1 || header[0] < 1) {
    throw ParseError(line_no, "expected a single positive population size");
  }
  const int n = static_cast<int>(header[0]);

  std::vector<OrderList> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_data_line(in, line, line_no)) {
      throw ParseError(line_no + 1, "missing order for individual " + std::to_string(i + 1));
    }
    orders.push_back(parse_permutation_line(line, line_no, n));
  }
  if (next_data_line(in, line, line_no)) {
    throw ParseError(line_no, "unexpected trailing content");
  }
  return PreferenceNetwork::from_orders(orders);
}

PreferenceNetwork read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_network(in);
}

void write_network(std::ostream& out, const PreferenceNetwork& net) {
  out << net.size() << "\n";
  for (int u = 0; u < net.size(); ++u) {
    const OrderList& order = net.order_of(u).order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) out << ' ';
      out << order[i] + 1;
    }
    out << "\n";
  }
}

std::string to_network_string(const PreferenceNetwork& net) {
  std::ostringstream out;
  write_network(out, net);
  return out.str();
}

void write_community_list(std::ostream& out, const std::vector<IndividualSet>& communities) {
  for (const IndividualSet& s : communities) {
    const std::vector<Individual>& members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out << ' ';
      out << members[i] + 1;
    }
    out << "\n";
  }
}

std::string to_community_list_string(const std::vector<IndividualSet>& communities) {
  std::ostringstream out;
  write_community_list(out, communities);
  return out.str();
}

std::vector<IndividualSet> read_community_list(std::istream& in) {
  std::vector<IndividualSet> out;
  std::string line;
  int line_no = 0;
  while (next_data_line(in, line, line_no)) {
    const std::vector<long> values = parse_ints(line, line_no);
    if (values.empty()) continue;
    std::vector<Individual> members;
    members.reserve(values.size());
    for (long value : values) {
      if (value < 1) throw ParseError(line_no, "id " + std::to_string(value) + " must be positive");
      members.push_back(static_cast<int>(value) - 1);
    }
    out.push_back(IndividualSet(std::move(members)));
  }
  return out;
}

IndividualSet parse_id_list(const std::string& text, int n) {
  std::vector<Individual> members;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      throw std::domain_error("invalid id '" + token + "'");
    }
    if (used != token.size()) throw std::domain_error("invalid id '" + token + "'");
    if (value < 1 || value > n) {
      throw std::domain_error("id " + std::to_string(value) + " out of range [1," +
                              std::to_string(n) + "]");
    }
    members.push_back(static_cast<int>(value) - 1);
  }
  if (members.empty()) throw std::domain_error("empty id list");
  IndividualSet out{std::vector<Individual>(members)};
  if (out.size() != static_cast<int>(members.size())) {
    throw std::domain_error("duplicate ids in list");
  }
  return out;
}

OrderList read_order_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) {
    throw ParseError(line_no + 1, "missing order line");
  }
  return parse_permutation_line(line, line_no, n);
}

}  // namespace prefnet
