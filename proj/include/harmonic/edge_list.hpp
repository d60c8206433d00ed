#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Parses the edge-list text format:
///
///   # comment (also allowed after data on a line)
///   n 3
///   1 2 2
///   2 3 7/2
///   3 1 0.25
///
/// The first non-comment line declares the vertex count; every following
/// line is "i j w" with w an integer, fraction or exact decimal.
inline WeightedDigraph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_n = false;
  int n = 0;
  std::vector<WeightedEdge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(t);
    if (fields.empty()) continue;

    auto bad = [&](const std::string& why) {
      fail(errc::parse, "line " + std::to_string(lineno) + ": " + why);
    };

    if (!have_n) {
      if (fields.size() != 2 || fields[0] != "n")
        bad("expected header 'n <count>'");
      try {
        size_t pos = 0;
        n = std::stoi(fields[1], &pos);
        if (pos != fields[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        bad("invalid vertex count '" + fields[1] + "'");
      }
      have_n = true;
      continue;
    }

    if (fields.size() != 3) bad("expected 'i j w'");
    int i = 0, j = 0;
    try {
      size_t pos = 0;
      i = std::stoi(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument("trailing");
      j = std::stoi(fields[1], &pos);
      if (pos != fields[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      bad("invalid vertex id");
    }
    Rational w;
    try {
      w = parse_rational(fields[2]);
    } catch (const Error& e) {
      bad(e.what());
    }
    edges.push_back({i, j, w});
  }

  if (!have_n) fail(errc::parse, "missing 'n <count>' header");
  return WeightedDigraph(n, edges);
}

inline WeightedDigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

}  // namespace harmonic
