#include "turan/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/freeness.hpp"
#include "turan/io.hpp"
#include "turan/search.hpp"

namespace turan {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

std::string render_digraph(const Digraph& d, const std::string& format) {
  if (format == "dot") return to_dot(d);
  return serialize_digraph(d, parse_format_name(format));
}

json witness_json(const Witness& w) {
  json j;
  j["source"] = w.source;
  j["target"] = w.target;
  j["midpoints"] = w.midpoints.elements();
  j["t"] = w.threshold;
  return j;
}

json search_result_json(const SearchResult& r) {
  json j;
  j["best_arcs"] = r.best_arcs;
  j["optimal"] = r.optimal;
  j["nodes"] = r.nodes;
  j["bound_used"] = r.bound_used;
  j["elapsed_secs"] = r.elapsed_secs;
  return j;
}

json range_report_json(const RangeReport& rep,
                       const std::vector<std::string>& args) {
  json j;
  j["tool_version"] = kToolVersion;
  j["command"] = args;
  j["items"] = json::array();
  for (const auto& r : rep.records) {
    json item;
    item["n"] = r.n;
    item["t"] = r.t;
    item["built"] = r.built;
    item["family"] = r.built ? json(to_string(r.family)) : json(nullptr);
    item["note"] = r.note;
    item["arcs"] = r.arcs;
    item["phi"] = r.phi;
    item["g"] = r.g;
    item["free_fast"] = r.free_fast;
    item["free_naive"] = r.free_naive ? json(*r.free_naive) : json(nullptr);
    item["neighbor_bound_pass"] = r.neighbor_bound_pass;
    item["successor_bound_pass"] = r.successor_bound_pass;
    item["pass"] = r.pass;
    j["items"].push_back(std::move(item));
  }
  j["overall"] = rep.pass ? "pass" : "fail";
  return j;
}

struct Options {
  long long n = 0;
  long long t = 0;
  std::string family = "auto";
  std::string format = "matrix";
  std::string in_path;
  std::string out_path;
  std::string mode = "bnb";
  long long budget_nodes = 0;
  double budget_secs = 0;
  std::uint64_t seed_rng = 1;
  int workers = 1;
  bool symmetry = false;
  std::string seed_file;
  long long n_lo = 0;
  long long n_hi = 0;
};

int cmd_formula(const Options& o, std::ostream& out, std::ostream& err) {
  ExBounds b = ex_bounds(o.n, o.t);
  json j;
  j["n"] = o.n;
  j["t"] = o.t;
  j["g"] = g_value(o.n, o.t);
  j["phi"] = phi_value(o.n, o.t);
  j["threshold"] = theorem_threshold(o.t);
  j["regime"] = to_string(b.regime);
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  out << j.dump(2) << "\n";
  err << "ex(" << o.n << ", t=" << o.t << ") in [" << b.lower << ", "
      << b.upper << "] (" << to_string(b.regime) << ")\n";
  return 0;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = static_cast<int>(o.n);
  const int t = static_cast<int>(o.t);
  Construction c = o.family == "auto" ? build_extremal(n, t)
                   : o.family == "d1" ? build_d1(n, t)
                   : o.family == "d2" ? build_d2(n, t)
                   : o.family == "d3"
                       ? build_d3(n, t)
                       : throw std::invalid_argument("unknown family '" +
                                                     o.family + "'");

  std::string text = render_digraph(c.graph, o.format);
  json j;
  j["n"] = o.n;
  j["t"] = o.t;
  j["family"] = to_string(c.spec.family);
  j["sizes"] = c.spec.sizes;
  j["arcs"] = c.graph.size();
  j["phi"] = phi_value(o.n, o.t);
  j["free"] = true;  // builders verify freeness before returning
  j["format"] = o.format;
  if (!o.out_path.empty()) {
    write_output(o.out_path, text);
    j["path"] = o.out_path;
  } else {
    j["digraph"] = text;
  }
  out << j.dump(2) << "\n";
  err << "built " << to_string(c.spec.family) << " on " << o.n << " vertices, "
      << c.graph.size() << " arcs\n";
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  Digraph d = parse_digraph(read_input(o.in_path), parse_format_name(o.format));
  FreenessParams p(static_cast<int>(o.t));
  auto w = find_witness(d, p);
  if (!w) {
    json j;
    j["free"] = true;
    j["n"] = d.order();
    j["t"] = o.t;
    out << j.dump(2) << "\n";
    err << "free at t=" << o.t << "\n";
    return 0;
  }
  out << witness_json(*w).dump(2) << "\n";
  err << "violation: " << w->midpoints.count() << " midpoints from "
      << w->source << " to " << w->target << " (t=" << o.t << ")\n";
  return 1;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.n = static_cast<int>(o.n);
  cfg.t = static_cast<int>(o.t);
  if (o.budget_nodes > 0) cfg.node_budget = o.budget_nodes;
  cfg.time_budget_secs = o.budget_secs;
  cfg.rng_seed = o.seed_rng;
  cfg.workers = o.workers;
  cfg.symmetry = o.symmetry;
  if (!o.seed_file.empty())
    cfg.seed_digraph =
        parse_digraph(read_input(o.seed_file), parse_format_name(o.format));

  SearchResult r = o.mode == "exhaustive" ? exhaustive_max(cfg.n, cfg.t)
                   : o.mode == "bnb"      ? branch_and_bound(cfg)
                   : o.mode == "local"    ? local_search(cfg)
                                          : throw std::invalid_argument(
                                                "unknown mode '" + o.mode + "'");

  json j = search_result_json(r);
  j["n"] = o.n;
  j["t"] = o.t;
  j["mode"] = o.mode;
  j["format"] = o.format;
  std::string text = render_digraph(r.best, o.format);
  if (!o.out_path.empty()) {
    write_output(o.out_path, text);
    j["path"] = o.out_path;
  } else {
    j["digraph"] = text;
  }
  out << j.dump(2) << "\n";
  err << "best " << r.best_arcs << " arcs, "
      << (r.optimal ? "optimal" : "not proven optimal") << ", " << r.nodes
      << " nodes\n";
  return 0;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args,
               std::ostream& out, std::ostream& err) {
  RangeReport rep = verify_range(static_cast<int>(o.t),
                                 static_cast<int>(o.n_lo),
                                 static_cast<int>(o.n_hi));
  json j = range_report_json(rep, args);
  out << j.dump(2) << "\n";
  err << "verify t=" << o.t << " n in [" << o.n_lo << ", " << o.n_hi
      << "]: " << (rep.pass ? "pass" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Extremal digraphs with bounded 2-path multiplicity"};
  app.require_subcommand(1);
  Options o;

  auto* formula = app.add_subcommand(
      "formula", "Evaluate the bound formulas and regime at (n, t)");
  formula->add_option("--n", o.n, "order")->required();
  formula->add_option("--t", o.t, "multiplicity bound (>= 2)")->required();

  auto* construct = app.add_subcommand(
      "construct", "Build an extremal construction and emit it");
  construct->add_option("--n", o.n, "order")->required();
  construct->add_option("--t", o.t, "multiplicity bound (>= 2)")->required();
  construct->add_option("--family", o.family, "d1|d2|d3|auto");
  construct->add_option("--format", o.format, "matrix|digraph6|dot");
  construct->add_option("--out", o.out_path, "write the digraph to a file");

  auto* check = app.add_subcommand(
      "check", "Check a digraph for freeness; print a witness if not");
  check->add_option("--t", o.t, "multiplicity bound (>= 1)")->required();
  check->add_option("--in", o.in_path, "input file, or - for stdin")
      ->required();
  check->add_option("--format", o.format, "matrix|digraph6");

  auto* search = app.add_subcommand(
      "search", "Search for free digraphs with many arcs");
  search->add_option("--n", o.n, "order")->required();
  search->add_option("--t", o.t, "multiplicity bound (>= 1)")->required();
  search->add_option("--mode", o.mode, "exhaustive|bnb|local");
  search->add_option("--budget-nodes", o.budget_nodes, "node budget");
  search->add_option("--budget-secs", o.budget_secs, "wall-clock budget");
  search->add_option("--seed-rng", o.seed_rng, "rng seed for local mode");
  search->add_option("--workers", o.workers, "worker threads");
  search->add_flag("--symmetry", o.symmetry,
                   "prefix-leader symmetry pruning (n <= 8)");
  search->add_option("--seed-file", o.seed_file,
                     "digraph file used as the starting incumbent");
  search->add_option("--format", o.format, "matrix|digraph6|dot");
  search->add_option("--out", o.out_path, "write the best digraph to a file");

  auto* verify = app.add_subcommand(
      "verify", "Verify constructions and bound suites over a range of n");
  verify->add_option("--t", o.t, "multiplicity bound (>= 2)")->required();
  verify->add_option("--n-lo", o.n_lo, "first order (>= t+6)")->required();
  verify->add_option("--n-hi", o.n_hi, "last order")->required();

  std::vector<const char*> argv;
  argv.push_back("turan2");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (formula->parsed()) return cmd_formula(o, out, err);
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (verify->parsed()) return cmd_verify(o, args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace turan
