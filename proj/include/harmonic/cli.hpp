#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonic/edge_list.hpp"
#include "harmonic/enumeration.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/index_set.hpp"
#include "harmonic/matrix.hpp"
#include "harmonic/symbolic.hpp"
#include "harmonic/theorems.hpp"

namespace harmonic {

enum class Format { text, structured };

/// Everything the argument parser decides, gathered before any computation
/// starts.
struct RunConfig {
  std::string subcommand;
  std::string input;  // path, or "-" for standard input
  Format format = Format::text;
  bool approx = false;

  std::string normalize = "sum1";       // prices
  int root = 0;                         // trees
  int vertex = 0;                       // dangles
  std::string mode = "count";           // trees, dangles
  std::string rows_spec, cols_spec;     // minor
  bool both = false;                    // minor
  std::string check = "all";            // verify
  int max_subset_size = 2;              // verify
  int n = 0;                            // symbolic
  bool force = false;                   // symbolic
};

namespace cli_detail {

/// One self-describing result record. Text mode prints `value` (or a
/// PASS/FAIL line for verifications); structured mode prints the record as
/// a single JSON line.
inline void emit(std::ostream& out, const RunConfig& cfg,
                 const std::string& check, const std::string& instance,
                 const std::string& value, bool pass,
                 const std::string& witness,
                 const std::string& approx_value = "") {
  if (cfg.format == Format::structured) {
    nlohmann::json record{{"check", check},
                          {"instance", instance},
                          {"value", value},
                          {"pass", pass},
                          {"witness", witness}};
    if (cfg.approx && !approx_value.empty()) record["approx"] = approx_value;
    out << record.dump() << "\n";
    return;
  }
  if (!value.empty()) out << value << "\n";
  if (cfg.approx && !approx_value.empty()) out << approx_value << "\n";
}

inline void emit_report(std::ostream& out, const RunConfig& cfg,
                        const VerificationReport& r,
                        const std::string& value = "") {
  if (cfg.format == Format::structured) {
    emit(out, cfg, r.check, r.instance, value, r.pass, r.witness);
    return;
  }
  if (r.pass)
    out << "PASS " << r.check << (value.empty() ? "" : ": " + value) << "\n";
  else
    out << "FAIL " << r.check << ": " << r.witness << "\n";
}

inline WeightedDigraph load_graph(const std::string& path, std::istream* in) {
  if (path == "-") return parse_edge_list(*in);
  std::ifstream file(path);
  if (!file) fail(errc::parse, "cannot open " + path);
  return parse_edge_list(file);
}

/// Comma-separated 1-based indices; the empty string is the empty set.
inline IndexSet parse_index_set(const std::string& spec, const char* what) {
  std::vector<int> ids;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      fail(errc::parse, std::string(what) + ": bad index '" + token + "'");
    }
    if (used != token.size())
      fail(errc::parse, std::string(what) + ": bad index '" + token + "'");
    ids.push_back(v);
  }
  return IndexSet(std::move(ids));
}

inline std::string join_rationals(const std::vector<Rational>& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += " ";
    s += format_rational(v);
  }
  return s;
}

inline std::string approx_str(const Rational& v) {
  std::ostringstream s;
  s << approx(v);
  return s.str();
}

inline std::string join_approx(const std::vector<Rational>& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += " ";
    s += approx_str(v);
  }
  return s;
}

inline std::string format_edges(const std::vector<Edge>& edges) {
  if (edges.empty()) return "(none)";
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += " ";
    s += str(e);
  }
  return s;
}

inline int cmd_prices(const RunConfig& cfg, const WeightedDigraph& g,
                      std::ostream& out) {
  const Normalization norm = cfg.normalize == "primitive"
                                 ? Normalization::primitive_integer
                                 : Normalization::sum_one;
  const PriceVector p = market_clearing_prices(g, norm);
  emit(out, cfg, "prices", describe(g), join_rationals(p.values), true, "",
       join_approx(p.values));
  return 0;
}

inline int cmd_trees(const RunConfig& cfg, const WeightedDigraph& g,
                     std::ostream& out) {
  const auto trees = enumerate_arborescences(g, cfg.root);
  const std::string instance =
      describe(g) + " root=" + std::to_string(cfg.root);
  if (cfg.mode == "count") {
    emit(out, cfg, "trees", instance, std::to_string(trees.size()), true, "");
  } else if (cfg.mode == "sum") {
    Rational total = 0;
    for (const auto& t : trees) total += subgraph_weight(g, t.edges);
    emit(out, cfg, "trees", instance, format_rational(total), true, "",
         approx_str(total));
  } else {
    for (const auto& t : trees)
      emit(out, cfg, "trees", instance, format_edges(t.edges), true, "");
  }
  return 0;
}

inline int cmd_dangles(const RunConfig& cfg, const WeightedDigraph& g,
                       std::ostream& out) {
  const auto dangles = enumerate_dangles(g, cfg.vertex);
  const std::string instance =
      describe(g) + " vertex=" + std::to_string(cfg.vertex);
  if (cfg.mode == "count") {
    emit(out, cfg, "dangles", instance, std::to_string(dangles.size()), true,
         "");
  } else if (cfg.mode == "sum") {
    Rational total = 0;
    for (const auto& d : dangles) total += subgraph_weight(g, d.all_edges());
    emit(out, cfg, "dangles", instance, format_rational(total), true, "",
         approx_str(total));
  } else {
    for (const auto& d : dangles) {
      std::string cycle;
      for (int v : d.cycle) {
        if (!cycle.empty()) cycle += " ";
        cycle += std::to_string(v);
      }
      emit(out, cfg, "dangles", instance,
           "cycle: " + cycle + " | forest: " + format_edges(d.forest_edges),
           true, "");
    }
  }
  return 0;
}

inline int cmd_minor(const RunConfig& cfg, const WeightedDigraph& g,
                     std::ostream& out) {
  const IndexSet rows = parse_index_set(cfg.rows_spec, "--rows");
  const IndexSet cols = parse_index_set(cfg.cols_spec, "--cols");
  if (rows.size() != cols.size())
    fail(errc::size_mismatch, "--rows " + rows.str() + " and --cols " +
                                  cols.str() + " differ in size");
  const Rational det = determinant(delete_rows_cols(laplacian(g), rows, cols));
  const std::string instance =
      describe(g) + " I=" + rows.str() + " J=" + cols.str();
  if (!cfg.both) {
    emit(out, cfg, "minor", instance, format_rational(det), true, "",
         approx_str(det));
    return 0;
  }
  const Rational sum = signed_forest_sum(g, rows, cols);
  const bool match = det == sum;
  emit(out, cfg, "minor", instance,
       format_rational(det) + " " + format_rational(sum) + " " +
           (match ? "MATCH" : "MISMATCH"),
       match,
       match ? "" : "determinant and signed forest sum differ");
  return match ? 0 : 1;
}

inline int cmd_verify(const RunConfig& cfg, const WeightedDigraph& g,
                      std::ostream& out) {
  std::vector<std::string> selected;
  if (cfg.check == "all")
    selected = {"all-minors", "dangle", "harmonic", "matrix-tree"};
  else
    selected = {cfg.check};

  bool all_pass = true;
  for (const std::string& name : selected) {
    VerificationReport report = VerificationReport::passing(name, describe(g));
    if (name == "harmonic") {
      report = verify_harmonic(g, harmonic_vector_enumeration(g).values);
    } else if (name == "matrix-tree") {
      report = verify_matrix_tree(g);
    } else if (name == "dangle") {
      for (int i = 1; i <= g.n() && report.pass; ++i)
        report = verify_dangle_identity(g, i);
      if (report.pass) report.instance = describe(g);
    } else {  // all-minors, exhaustive over |I| = |J| <= max subset size
      const int cap = std::min(cfg.max_subset_size, g.n());
      for (int k = 0; k <= cap && report.pass; ++k)
        for (const IndexSet& rows : index_subsets(g.n(), k)) {
          for (const IndexSet& cols : index_subsets(g.n(), k)) {
            report = verify_all_minors(g, rows, cols);
            if (!report.pass) break;
          }
          if (!report.pass) break;
        }
      if (report.pass)
        report.instance =
            describe(g) + " |I|<=" + std::to_string(cap);
    }
    emit_report(out, cfg, report);
    all_pass = all_pass && report.pass;
  }
  return all_pass ? 0 : 1;
}

inline int cmd_symbolic(const RunConfig& cfg, std::ostream& out) {
  const VerificationReport report =
      verify_symbolic_matrix_tree(cfg.n, cfg.force);

  std::vector<size_t> counts;
  for (int j = 1; j <= cfg.n; ++j)
    counts.push_back(symbolic_tree_polynomial(cfg.n, j).term_count());
  const bool uniform =
      std::all_of(counts.begin(), counts.end(),
                  [&](size_t c) { return c == counts.front(); });

  for (int j = 1; j <= cfg.n; ++j)
    emit(out, cfg, "symbolic-terms", report.instance,
         "column " + std::to_string(j) + ": " +
             std::to_string(counts[static_cast<size_t>(j) - 1]) + " terms",
         true, "");
  const std::string summary =
      uniform ? std::to_string(counts.front()) + " terms per column" : "";
  emit_report(out, cfg, report, summary);
  return report.pass ? 0 : 1;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name; results go to `out`, diagnostics to `err`, and `in` backs
/// the "-" input path.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err, std::istream* in = &std::cin) {
  CLI::App app{"Exact harmonic vectors, tree enumeration, and matrix tree "
               "theorem verification for weighted digraphs"};
  app.fallthrough();
  RunConfig cfg;

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--approx", cfg.approx,
               "Also print a decimal approximation (text mode)");
  app.require_subcommand(1);

  auto* prices = app.add_subcommand(
      "prices", "Market-clearing price vector of a nonnegative graph");
  prices->add_option("file", cfg.input, "Edge-list file, or - for stdin")
      ->required();
  prices->add_option("--normalize", cfg.normalize, "Normalization")
      ->check(CLI::IsMember({"sum1", "primitive"}));

  auto* trees = app.add_subcommand(
      "trees", "Spanning arborescences rooted at a vertex");
  trees->add_option("file", cfg.input, "Edge-list file, or - for stdin")
      ->required();
  trees->add_option("--root", cfg.root, "Root vertex")->required();
  trees->add_option("--mode", cfg.mode, "count, sum, or list")
      ->check(CLI::IsMember({"count", "sum", "list"}));

  auto* dangles = app.add_subcommand(
      "dangles", "Dangles whose cycle passes through a vertex");
  dangles->add_option("file", cfg.input, "Edge-list file, or - for stdin")
      ->required();
  dangles->add_option("--vertex", cfg.vertex, "Cycle vertex")->required();
  dangles->add_option("--mode", cfg.mode, "count, sum, or list")
      ->check(CLI::IsMember({"count", "sum", "list"}));

  auto* minor = app.add_subcommand(
      "minor", "Laplacian minor determinant, optionally vs. the signed "
               "forest sum");
  minor->add_option("file", cfg.input, "Edge-list file, or - for stdin")
      ->required();
  minor->add_option("--rows", cfg.rows_spec, "Rows to delete (comma list)")
      ->required();
  minor->add_option("--cols", cfg.cols_spec, "Columns to delete (comma list)")
      ->required();
  minor->add_flag("--both", cfg.both,
                  "Also compute the signed forest sum and compare");

  auto* verify = app.add_subcommand(
      "verify", "Check the combinatorial identities on a graph");
  verify->add_option("file", cfg.input, "Edge-list file, or - for stdin")
      ->required();
  verify->add_option("--check", cfg.check, "Which identity")
      ->check(CLI::IsMember(
          {"harmonic", "matrix-tree", "all-minors", "dangle", "all"}));
  verify->add_option("--max-subset-size", cfg.max_subset_size,
                     "Largest |I| = |J| for all-minors")
      ->check(CLI::NonNegativeNumber);

  auto* symbolic = app.add_subcommand(
      "symbolic", "Verify the matrix tree theorem symbolically on the "
                  "complete digraph");
  symbolic->add_option("--n", cfg.n, "Number of vertices")->required();
  symbolic->add_flag("--force", cfg.force, "Allow n above the cap of 4");

  std::vector<const char*> argv;
  argv.push_back("harmonic");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  }

  cfg.format = format == "structured" ? Format::structured : Format::text;

  try {
    if (symbolic->parsed()) {
      cfg.subcommand = "symbolic";
      return cli_detail::cmd_symbolic(cfg, out);
    }
    const WeightedDigraph g = cli_detail::load_graph(cfg.input, in);
    if (prices->parsed()) {
      cfg.subcommand = "prices";
      return cli_detail::cmd_prices(cfg, g, out);
    }
    if (trees->parsed()) {
      cfg.subcommand = "trees";
      return cli_detail::cmd_trees(cfg, g, out);
    }
    if (dangles->parsed()) {
      cfg.subcommand = "dangles";
      return cli_detail::cmd_dangles(cfg, g, out);
    }
    if (minor->parsed()) {
      cfg.subcommand = "minor";
      return cli_detail::cmd_minor(cfg, g, out);
    }
    cfg.subcommand = "verify";
    return cli_detail::cmd_verify(cfg, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::negative_weight:
      case errc::not_irreducible:
        return 2;
      default:
        return 64;
    }
  }
}

}  // namespace harmonic
