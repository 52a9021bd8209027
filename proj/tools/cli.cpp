#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

#include "sigdef/coloration.hpp"
#include "sigdef/io/crosscheck.hpp"
#include "sigdef/io/dot.hpp"
#include "sigdef/io/generate.hpp"
#include "sigdef/io/sg_format.hpp"
#include "sigdef/maxdef.hpp"
#include "sigdef/oracle.hpp"
#include "sigdef/switching.hpp"

namespace sigdef::cli {

namespace {

using json = nlohmann::ordered_json;

// A command result: exit code, JSON payload, and optionally raw text that
// replaces the report on stdout.
struct Outcome {
  int code = exit_ok;
  json result = json::object();
  std::optional<std::string> text;
};

std::vector<std::string> labels_of(const SignedGraph &g, std::span<const VertexId> ids) {
  std::vector<std::string> out;
  for (VertexId v : ids) out.push_back(g.label(v));
  return out;
}

json coloration_json(const SignedGraph &g, const Coloration &kappa) {
  json out = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[g.label(v)] = kappa[v];
  return out;
}

json trace_json(const std::vector<TraceEvent> &trace) {
  json out = json::array();
  for (const auto &e : trace) {
    out.push_back({{"step", e.step},
                   {"action", e.action},
                   {"pairs_removed", e.pairs_removed},
                   {"S_delta", e.cover_added},
                   {"B_delta", e.forbidden_added},
                   {"merges", e.merges}});
  }
  return out;
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

SignedGraph load(const std::string &path, std::ostream &err) {
  auto parsed = io::load_sg(path);
  if (parsed.duplicate_edges > 0)
    err << "warning: " << parsed.duplicate_edges << " duplicate edge(s) collapsed in " << path << '\n';
  return std::move(parsed.graph);
}

Outcome cmd_maxdef(const SignedGraph &g, bool trace, bool assume, bool invariants) {
  MaxDefOptions opts;
  opts.assume_three_chromatic = assume;
  opts.check_invariants = invariants;
  Outcome o;
  try {
    auto r = maxdef(g, opts);
    o.result["value"] = r.value;
    o.result["cover"] = r.cover ? json(*r.cover) : json(nullptr);
    o.result["terminating_step"] = r.terminating_step;
    if (trace) o.result["trace"] = trace_json(r.trace);
  } catch (const oracle::NotThreeChromatic &e) {
    o.code = exit_failure;
    o.result["error"] = e.what();
    o.result["chi"] = e.chi();
  } catch (const NoPositiveEdge &e) {
    o.code = exit_failure;
    o.result["error"] = e.what();
  } catch (const InvariantViolation &e) {
    o.code = exit_failure;
    o.result["error"] = e.what();
  }
  return o;
}

Outcome cmd_deficiency(const SignedGraph &g) {
  auto rep = oracle::deficiency_report(g);
  Outcome o;
  o.result["chi"] = rep.chi;
  o.result["range"] = rep.range;
  o.result["M"] = rep.max;
  o.result["m"] = rep.min;
  json w = json::object();
  for (const auto &[d, kappa] : rep.witnesses) w[std::to_string(d)] = coloration_json(g, kappa);
  o.result["witnesses"] = std::move(w);
  return o;
}

Outcome cmd_classify2(const SignedGraph &g) {
  Outcome o;
  const int chi = oracle::chromatic_number(g);
  o.result["chi"] = chi;
  if (chi != 2) {
    o.code = exit_failure;
    o.result["error"] = "graph is " + std::to_string(chi) + "-chromatic, not 2-chromatic";
    return o;
  }
  auto c = classify_two_chromatic(g);
  o.result["case"] = std::string(to_string(c));
  o.result["M"] = max_deficiency(c);
  o.result["m"] = min_deficiency(c);
  return o;
}

Outcome cmd_switch(const SignedGraph &g, const std::vector<std::string> &set, const std::string &out_path) {
  auto ids = resolve_labels(g, set);
  auto h = switch_graph(g, ids);
  Outcome o;
  o.result["switched"] = labels_of(g, ids);
  o.result["positive_edges"] = h.positive_edge_count();
  o.result["negative_edges"] = h.negative_edge_count();
  auto text = io::serialize_sg(h);
  if (out_path.empty()) {
    o.text = std::move(text);
  } else {
    write_file(out_path, text);
    o.result["out"] = out_path;
  }
  return o;
}

Outcome cmd_switching_range(const SignedGraph &g) {
  auto rep = oracle::switching_report(g);
  Outcome o;
  o.result["chi"] = rep.chi;
  o.result["range"] = rep.range;
  json w = json::object();
  for (const auto &[d, wit] : rep.witnesses) {
    auto h = switch_graph(g, wit.switched);
    w[std::to_string(d)] = {{"switched", labels_of(g, wit.switched)},
                            {"coloration", coloration_json(h, wit.coloration)}};
  }
  o.result["witnesses"] = std::move(w);
  return o;
}

Outcome cmd_cover_check(const SignedGraph &g, const std::vector<std::string> &cover) {
  auto ids = resolve_labels(g, cover);
  auto in = membership(g, ids);
  json internal = json::array();
  json uncovered = json::array();
  for (const Edge &e : g.edges()) {
    std::string name = g.label(e.u) + sign_char(e.sign) + g.label(e.v);
    if (in[e.u] && in[e.v]) internal.push_back(name);
    if (e.sign == Sign::positive && !in[e.u] && !in[e.v]) uncovered.push_back(name);
  }
  Outcome o;
  o.result["cover"] = labels_of(g, ids);
  o.result["stable"] = internal.empty();
  o.result["covers_positive"] = uncovered.empty();
  o.result["valid"] = internal.empty() && uncovered.empty();
  o.result["internal_edges"] = std::move(internal);
  o.result["uncovered_edges"] = std::move(uncovered);
  if (!o.result["valid"].get<bool>()) o.code = exit_failure;
  return o;
}

Outcome cmd_dot(const SignedGraph &g, const std::vector<std::string> &cover, const std::string &out_path) {
  auto ids = resolve_labels(g, cover);
  auto text = io::export_dot(g, ids);
  Outcome o;
  if (out_path.empty()) {
    o.text = std::move(text);
  } else {
    write_file(out_path, text);
    o.result["out"] = out_path;
    o.result["highlighted"] = labels_of(g, ids);
  }
  return o;
}

Outcome cmd_crosscheck(const io::CrosscheckOptions &opts) {
  auto s = io::crosscheck(opts);
  Outcome o;
  o.result["instances"] = s.instances;
  o.result["matched"] = s.matched_instances;
  o.result["general"] = s.general_instances;
  o.result["three_chromatic"] = s.three_chromatic;
  o.result["value_one"] = s.value_one;
  o.result["value_zero"] = s.value_zero;
  json steps = json::object();
  for (const auto &[step, n] : s.terminating_steps) steps[std::to_string(step)] = n;
  o.result["terminating_steps"] = std::move(steps);
  json mm = json::array();
  for (const auto &m : s.mismatches)
    mm.push_back({{"index", m.index}, {"kind", m.kind}, {"detail", m.detail}, {"graph", m.graph}});
  o.result["mismatch_count"] = s.mismatches.size();
  o.result["mismatches"] = std::move(mm);
  if (!s.ok()) o.code = exit_failure;
  return o;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Deficiency analysis of signed graphs", "sigdef"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::vector<std::string> labels;
  bool trace = false;
  bool assume = false;
  bool invariants = false;

  auto *maxdef_cmd = app.add_subcommand("maxdef", "decide maximum deficiency 1 of a 3-chromatic graph");
  maxdef_cmd->add_option("file", file, "graph in .sg format")->required();
  maxdef_cmd->add_flag("--trace", trace, "include the step log");
  maxdef_cmd->add_flag("--assume-chromatic-3", assume, "skip the chi = 3 certification");
  maxdef_cmd->add_flag("--check-invariants", invariants, "verify state invariants after every step");

  auto *chromatic_cmd = app.add_subcommand("chromatic", "exact chromatic number");
  chromatic_cmd->add_option("file", file, "graph in .sg format")->required();

  auto *deficiency_cmd = app.add_subcommand("deficiency", "exact deficiency range with witnesses");
  deficiency_cmd->add_option("file", file, "graph in .sg format")->required();

  auto *classify_cmd = app.add_subcommand("classify2", "deficiency class of a 2-chromatic graph");
  classify_cmd->add_option("file", file, "graph in .sg format")->required();

  auto *switch_cmd = app.add_subcommand("switch", "switch a vertex set and print the resulting graph");
  switch_cmd->add_option("file", file, "graph in .sg format")->required();
  switch_cmd->add_option("--set", labels, "comma-separated labels")->delimiter(',')->required();
  switch_cmd->add_option("--out", out_path, "write the graph here and print a report instead");

  auto *range_cmd = app.add_subcommand("switching-range", "deficiencies reachable by switching");
  range_cmd->add_option("file", file, "graph in .sg format")->required();

  auto *cover_cmd = app.add_subcommand("cover-check", "check a stable cover of the positive edges");
  cover_cmd->add_option("file", file, "graph in .sg format")->required();
  cover_cmd->add_option("--cover", labels, "comma-separated labels")->delimiter(',')->required();

  std::size_t pairs = 0;
  std::size_t vertices = 0;
  double neg_prob = 0.1;
  double pos_prob = 0.3;
  std::uint64_t seed = 0;
  bool general = false;
  auto *gen_cmd = app.add_subcommand("gen", "generate a random graph");
  gen_cmd->add_option("--pairs", pairs, "matched pairs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--neg-prob", neg_prob, "negative edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", seed, "random seed")->required();
  gen_cmd->add_flag("--general", general, "arbitrary signed graph instead of matched pairs");
  gen_cmd->add_option("--vertices", vertices, "vertex count for --general");
  gen_cmd->add_option("--pos-prob", pos_prob, "positive edge probability for --general")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--out", out_path, "write the graph here and print a report instead");

  auto *dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  dot_cmd->add_option("file", file, "graph in .sg format")->required();
  dot_cmd->add_option("--cover", labels, "labels drawn as boxes")->delimiter(',');
  dot_cmd->add_option("--out", out_path, "write the DOT text here and print a report instead");

  io::CrosscheckOptions cc;
  bool skip_invariants = false;
  auto *cross_cmd = app.add_subcommand("crosscheck", "random MaxDef against oracle equivalence runs");
  cross_cmd->add_option("--count", cc.count, "number of instances");
  cross_cmd->add_option("--max-pairs", cc.max_pairs, "largest matched instance")->check(CLI::PositiveNumber);
  cross_cmd->add_option("--seed", cc.seed, "random seed")->required();
  cross_cmd->add_flag("--skip-invariants", skip_invariants, "do not check state invariants");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  auto *cmd = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::optional<std::uint64_t> report_seed;
  try {
    const std::string name = cmd->get_name();
    if (name == "gen") {
      report_seed = seed;
      SignedGraph g;
      if (general) {
        if (vertices == 0) throw CLI::ValidationError("--general needs --vertices");
        g = io::generate_general(vertices, pos_prob, neg_prob, seed);
      } else {
        if (pairs == 0) throw CLI::ValidationError("gen needs --pairs");
        g = io::generate_matched(pairs, neg_prob, seed);
      }
      auto text = io::serialize_sg(g);
      if (out_path.empty()) {
        o.text = std::move(text);
      } else {
        write_file(out_path, text);
        o.result["out"] = out_path;
        o.result["vertices"] = g.vertex_count();
        o.result["positive_edges"] = g.positive_edge_count();
        o.result["negative_edges"] = g.negative_edge_count();
      }
    } else if (name == "crosscheck") {
      report_seed = cc.seed;
      cc.check_invariants = !skip_invariants;
      o = cmd_crosscheck(cc);
    } else {
      SignedGraph g = load(file, err);
      if (name == "maxdef") {
        o = cmd_maxdef(g, trace, assume, invariants);
      } else if (name == "chromatic") {
        o.result["chi"] = oracle::chromatic_number(g);
      } else if (name == "deficiency") {
        o = cmd_deficiency(g);
      } else if (name == "classify2") {
        o = cmd_classify2(g);
      } else if (name == "switch") {
        o = cmd_switch(g, labels, out_path);
      } else if (name == "switching-range") {
        o = cmd_switching_range(g);
      } else if (name == "cover-check") {
        o = cmd_cover_check(g, labels);
      } else if (name == "dot") {
        o = cmd_dot(g, labels, out_path);
      }
    }
  } catch (const CLI::ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const io::ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const oracle::BoundExceeded &e) {
    err << "bound exceeded: " << e.what() << '\n';
    return exit_bound;
  } catch (const GraphError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::runtime_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.text) {
    out << *o.text;
    return o.code;
  }
  if (o.code != exit_ok && o.result.contains("error"))
    err << "error: " << o.result["error"].get<std::string>() << '\n';
  json report;
  report["schema"] = "sigdef/1";
  report["command"] = cmd->get_name();
  report["args"] = args;
  report["result"] = std::move(o.result);
  report["elapsed_ms"] = elapsed;
  if (report_seed) report["seed"] = *report_seed;
  out << report.dump() << '\n';
  return o.code;
}

}  // namespace sigdef::cli
