// Command-line front end: generate, compact, verify, measure, brute-force,
// render, and benchmark orthogonal drawings stored as JSON files.
//
// Exit codes: 0 success, 1 domain error (invalid drawing, infeasible target,
// oracle cap exceeded, unreadable file), 2 usage error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthocompact/bench.hpp"
#include "orthocompact/compaction.hpp"
#include "orthocompact/fpt.hpp"
#include "orthocompact/generators.hpp"
#include "orthocompact/json_io.hpp"
#include "orthocompact/oracle.hpp"
#include "orthocompact/path_compact.hpp"
#include "orthocompact/reductions.hpp"
#include "orthocompact/svg.hpp"

namespace oc = orthocompact;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

oc::CompactionMode mode_from_name(const std::string& name) {
  if (name == "row") return oc::row_by_row();
  if (name == "vertical") return oc::vertex_vertical();
  if (name == "free") return oc::vertex_free();
  throw std::invalid_argument("mode '" + name + "' has no direct compaction semantics here");
}

oc::Objective objective_from_name(const std::string& name) {
  if (name == "rows") return oc::Objective::Rows;
  if (name == "area") return oc::Objective::Area;
  if (name == "volume") return oc::Objective::Volume;
  if (name == "longest") return oc::Objective::LongestEdge;
  if (name == "longest-vertical") return oc::Objective::LongestVerticalEdge;
  if (name == "total") return oc::Objective::TotalLength;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

json metrics_json(const oc::Drawing& d) {
  oc::Metrics m = oc::metrics(d);
  json j{{"node_count", m.node_count},
         {"rows", m.rows},
         {"width", m.width},
         {"height", m.height},
         {"area", m.area},
         {"longest_edge", m.longest_edge},
         {"total_edge_length", m.total_edge_length},
         {"longest_vertical_edge", m.longest_vertical_edge}};
  if (d.dimension == 3) {
    j["depth"] = m.depth;
    j["volume"] = m.volume;
  }
  return j;
}

void print_metrics_text(const oc::Drawing& d, std::ostream& out) {
  json j = metrics_json(d);
  // Fixed field order for scripts and for eyeballs.
  for (const char* key : {"node_count", "rows", "width", "height", "depth", "area",
                          "volume", "longest_edge", "total_edge_length",
                          "longest_vertical_edge"})
    if (j.contains(key)) out << key << ' ' << j[key].dump() << '\n';
}

// Reported output metrics are always recomputed by re-reading the written
// file, never taken from the in-memory result.
json metrics_of_file(const std::string& path) {
  return metrics_json(oc::load_drawing(path));
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string command_echo(int argc, char** argv) {
  std::string echo;
  for (int i = 0; i < argc; ++i) {
    if (i) echo += ' ';
    echo += argv[i];
  }
  return echo;
}

struct GenOptions {
  std::string construction;
  std::string in, out;
  int theta = 1, phi = 1, k = 6;
  std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt, bool as_json, const std::string& echo) {
  Stopwatch watch;
  bool needs_graph = opt.construction != "counterexample" &&
                     opt.construction != "random-graph" &&
                     opt.construction != "random-path" &&
                     opt.construction != "feature-soup";
  if (needs_graph && opt.in.empty()) {
    std::cerr << "gen: --construction " << opt.construction << " requires --in <graph.json>\n";
    return kUsageError;
  }

  if (opt.construction == "random-graph") {
    oc::Graph g = oc::random_connected_graph(opt.k, opt.k / 2, opt.seed);
    oc::write_text_file(opt.out, oc::emit_graph(g));
    if (as_json)
      std::cout << json{{"command", echo},
                        {"out", opt.out},
                        {"vertices", g.n},
                        {"edges", g.edges.size()},
                        {"wall_ms", watch.ms()}}
                       .dump(2)
                << '\n';
    return kOk;
  }

  oc::Drawing d;
  if (opt.construction == "counterexample") {
    d = oc::counterexample_instance();
  } else if (opt.construction == "random-path") {
    d = oc::random_path_drawing(opt.k, opt.seed);
  } else if (opt.construction == "feature-soup") {
    d = oc::random_feature_drawing(opt.k, opt.seed);
  } else {
    oc::Graph g = oc::load_graph(opt.in);
    if (opt.construction == "path")
      d = oc::build_path_drawing(g);
    else if (opt.construction == "row-frame")
      d = oc::add_row_frame(g, opt.phi);
    else if (opt.construction == "bundle")
      d = oc::build_bundle_drawing(g, opt.theta);
    else if (opt.construction == "vxv-frame")
      d = oc::add_vxv_frame(g, opt.theta, opt.phi);
    else if (opt.construction == "fixbar")
      d = oc::add_fixbar(oc::build_bundle_drawing(g, opt.theta));
    else if (opt.construction == "3d")
      d = oc::build_3d_drawing(g);
    else  // "3d-frame"
      d = oc::add_3d_frame(g);
  }
  oc::write_text_file(opt.out, oc::emit_drawing(d));
  if (as_json)
    std::cout << json{{"command", echo},
                      {"in", opt.in},
                      {"out", opt.out},
                      {"construction", opt.construction},
                      {"metrics_after", metrics_of_file(opt.out)},
                      {"wall_ms", watch.ms()}}
                     .dump(2)
              << '\n';
  return kOk;
}

struct CompactOptions {
  std::string in, out, mode = "vertical", objective = "rows";
  std::optional<int> k;
};

int run_compact(const CompactOptions& opt, bool as_json, const std::string& echo) {
  Stopwatch watch;
  oc::Drawing d = oc::load_drawing(opt.in);
  oc::ValidityReport valid = oc::validate(d);
  if (!valid.ok()) {
    std::cerr << "compact: input drawing is invalid:\n" << valid.to_string();
    return kDomainError;
  }

  oc::Drawing result;
  int rows_used = -1;
  if (opt.mode == "vertical") {
    if (opt.k) {
      auto res = oc::compact_to_k_rows(d, *opt.k);
      if (!res) {
        std::cerr << "compact: infeasible: no vertical compaction onto " << *opt.k
                  << " rows\n";
        return kDomainError;
      }
      result = res->first;
      rows_used = *opt.k;
    } else {
      auto [w, k] = oc::optimal_vertical_compaction(d);
      result = w;
      rows_used = k;
    }
  } else if (opt.mode == "free-path") {
    result = oc::free_compact_path(d);
    rows_used = oc::metrics(result).rows;
  } else {
    // Row and free modes fall back to the brute-force oracle (size-capped).
    auto res = oc::brute_optimal_compaction(d, mode_from_name(opt.mode),
                                            objective_from_name(opt.objective));
    result = res.witness;
    rows_used = oc::metrics(result).rows;
  }

  if (!opt.out.empty()) oc::write_text_file(opt.out, oc::emit_drawing(result));
  json report{{"command", echo},
              {"in", opt.in},
              {"out", opt.out},
              {"mode", opt.mode},
              {"rows", rows_used},
              {"metrics_before", metrics_json(d)},
              {"metrics_after",
               opt.out.empty() ? metrics_json(result) : metrics_of_file(opt.out)},
              {"wall_ms", watch.ms()}};
  if (as_json)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << "rows " << rows_used << '\n';
  return kOk;
}

struct VerifyOptions {
  std::string in, candidate, assignment, mode = "row";
};

int run_verify(const VerifyOptions& opt, bool as_json, const std::string& echo) {
  Stopwatch watch;
  if (opt.candidate.empty() == opt.assignment.empty()) {
    std::cerr << "verify: pass exactly one of --candidate or --assignment\n";
    return kUsageError;
  }
  oc::Drawing original = oc::load_drawing(opt.in);
  oc::CompactionMode mode = mode_from_name(opt.mode);

  oc::Drawing candidate;
  if (!opt.candidate.empty()) {
    candidate = oc::load_drawing(opt.candidate);
  } else {
    std::string text = oc::read_text_file(opt.assignment);
    if (opt.mode == "row")
      candidate = oc::apply_row_assignment(original, oc::parse_row_assignment(text));
    else if (opt.mode == "vertical")
      candidate =
          oc::apply_feature_assignment(original, oc::parse_feature_assignment_vertical(text));
    else
      candidate = oc::apply_point_assignment(original, oc::parse_feature_assignment_free(text));
  }

  oc::CompactionCheck check = oc::is_compaction(original, candidate, mode);
  if (as_json)
    std::cout << json{{"command", echo},
                      {"in", opt.in},
                      {"mode", opt.mode},
                      {"ok", check.ok},
                      {"reasons", check.reasons},
                      {"wall_ms", watch.ms()}}
                     .dump(2)
              << '\n';
  else if (check.ok)
    std::cout << "ok\n";
  else
    std::cout << check.to_string();
  return check.ok ? kOk : kDomainError;
}

struct OracleOptions {
  std::string in, out, mode = "vertical", objective = "rows";
};

int run_oracle(const OracleOptions& opt, bool as_json, const std::string& echo) {
  Stopwatch watch;
  oc::Drawing d = oc::load_drawing(opt.in);
  auto res = oc::brute_optimal_compaction(d, mode_from_name(opt.mode),
                                          objective_from_name(opt.objective));
  oc::Objective obj = objective_from_name(opt.objective);
  bool agreement =
      oc::objective_value(oc::metrics(res.witness), obj, res.witness.dimension) == res.value;
  if (!opt.out.empty()) {
    oc::write_text_file(opt.out, oc::emit_drawing(res.witness));
    oc::Drawing reread = oc::load_drawing(opt.out);
    agreement = oc::objective_value(oc::metrics(reread), obj, reread.dimension) == res.value;
  }
  if (as_json)
    std::cout << json{{"command", echo},
                      {"in", opt.in},
                      {"out", opt.out},
                      {"mode", opt.mode},
                      {"objective", opt.objective},
                      {"value", res.value},
                      {"oracle_agreement", agreement},
                      {"metrics_before", metrics_json(d)},
                      {"wall_ms", watch.ms()}}
                     .dump(2)
              << '\n';
  else
    std::cout << json{{"value", res.value}}.dump() << '\n';
  return agreement ? kOk : kDomainError;
}

int run_bench(const std::string& construction, const std::string& out_path, bool as_json,
              const std::string& echo) {
  Stopwatch watch;
  oc::BenchTable table;
  bool slope_meaningful = true;
  if (construction == "path-compact") {
    table = oc::bench_family({100, 1000, 10000}, [](long long size) {
      oc::Drawing d = oc::staircase_drawing(int(size));
      return [d] { oc::free_compact_path(d); };
    });
  } else if (construction == "fpt") {
    table = oc::bench_family({99, 999, 9999}, [](long long size) {
      oc::Drawing d = oc::serpentine_drawing(3, int(size / 3));
      return [d] { oc::optimal_vertical_compaction(d); };
    });
  } else {  // "fpt-k": growing parameter on a small drawing; qualitative only
    slope_meaningful = false;
    table = oc::bench_family({1, 2, 3, 4, 5}, [](long long k) {
      oc::Drawing d = oc::serpentine_drawing(int(k), 3);
      return [d] { oc::optimal_vertical_compaction(d); };
    });
  }
  std::string text = table.to_string();
  if (slope_meaningful)
    text += "slope " + std::to_string(table.loglog_slope()) + "\n";
  if (!out_path.empty()) oc::write_text_file(out_path, text);
  if (as_json) {
    json rows = json::array();
    for (const auto& p : table.points) rows.push_back({{"size", p.size}, {"ms", p.millis}});
    json report{{"command", echo},
                {"construction", construction},
                {"table", rows},
                {"wall_ms", watch.ms()}};
    if (slope_meaningful) report["slope"] = table.loglog_slope();
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal drawing construction, compaction, and analysis toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON run report on stdout");

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "construct a drawing or graph instance");
  cmd_gen->add_option("--construction", gen.construction, "what to build")
      ->required()
      ->check(CLI::IsMember({"path", "row-frame", "bundle", "vxv-frame", "fixbar", "3d",
                             "3d-frame", "counterexample", "random-graph", "random-path",
                             "feature-soup"}));
  cmd_gen->add_option("--in", gen.in, "input graph JSON");
  cmd_gen->add_option("--out", gen.out, "output file")->required();
  cmd_gen->add_option("--theta", gen.theta, "bundle thickness");
  cmd_gen->add_option("--phi", gen.phi, "frame multiplier");
  cmd_gen->add_option("--k", gen.k, "size for random constructions");
  cmd_gen->add_option("--seed", gen.seed, "random seed");

  CompactOptions compact;
  CLI::App* cmd_compact = app.add_subcommand("compact", "compact a drawing");
  cmd_compact->add_option("--in", compact.in, "input drawing JSON")->required();
  cmd_compact->add_option("--out", compact.out, "output drawing JSON");
  cmd_compact->add_option("--mode", compact.mode, "compaction mode")
      ->check(CLI::IsMember({"row", "vertical", "free", "free-path"}));
  cmd_compact->add_option("--objective", compact.objective,
                          "objective for the oracle-backed modes (row, free)")
      ->check(CLI::IsMember({"rows", "area", "volume", "longest", "longest-vertical", "total"}));
  cmd_compact->add_option("--k", compact.k, "target row count (vertical mode)");

  VerifyOptions verify;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a compaction candidate");
  cmd_verify->add_option("--in", verify.in, "original drawing JSON")->required();
  cmd_verify->add_option("--candidate", verify.candidate, "candidate drawing JSON");
  cmd_verify->add_option("--assignment", verify.assignment, "assignment JSON to apply");
  cmd_verify->add_option("--mode", verify.mode, "compaction mode")
      ->check(CLI::IsMember({"row", "vertical", "free"}));

  std::string metrics_in;
  CLI::App* cmd_metrics = app.add_subcommand("metrics", "measure a drawing");
  cmd_metrics->add_option("--in", metrics_in, "drawing JSON")->required();

  OracleOptions oracle;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force optimum (size-capped)");
  cmd_oracle->add_option("--in", oracle.in, "drawing JSON")->required();
  cmd_oracle->add_option("--out", oracle.out, "witness drawing JSON");
  cmd_oracle->add_option("--mode", oracle.mode, "compaction mode")
      ->check(CLI::IsMember({"row", "vertical", "free"}));
  cmd_oracle->add_option("--objective", oracle.objective, "objective to minimize")
      ->check(CLI::IsMember({"rows", "area", "volume", "longest", "longest-vertical", "total"}));

  std::string render_in, render_out;
  CLI::App* cmd_render = app.add_subcommand("render", "render a drawing to SVG");
  cmd_render->add_option("--in", render_in, "drawing JSON")->required();
  cmd_render->add_option("--out", render_out, "output SVG file")->required();

  std::string bench_construction, bench_out;
  CLI::App* cmd_bench = app.add_subcommand("bench", "time an algorithm family");
  cmd_bench->add_option("--construction", bench_construction, "family to time")
      ->required()
      ->check(CLI::IsMember({"path-compact", "fpt", "fpt-k"}));
  cmd_bench->add_option("--out", bench_out, "write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  std::string echo = command_echo(argc, argv);
  try {
    if (cmd_gen->parsed()) return run_gen(gen, as_json, echo);
    if (cmd_compact->parsed()) return run_compact(compact, as_json, echo);
    if (cmd_verify->parsed()) return run_verify(verify, as_json, echo);
    if (cmd_metrics->parsed()) {
      Stopwatch watch;
      oc::Drawing d = oc::load_drawing(metrics_in);
      oc::ValidityReport valid = oc::validate(d);
      if (!valid.ok()) {
        std::cerr << "metrics: input drawing is invalid:\n" << valid.to_string();
        return kDomainError;
      }
      if (as_json)
        std::cout << json{{"command", echo},
                          {"in", metrics_in},
                          {"metrics", metrics_json(d)},
                          {"wall_ms", watch.ms()}}
                         .dump(2)
                  << '\n';
      else
        print_metrics_text(d, std::cout);
      return kOk;
    }
    if (cmd_oracle->parsed()) return run_oracle(oracle, as_json, echo);
    if (cmd_render->parsed()) {
      oc::Drawing d = oc::load_drawing(render_in);
      oc::write_text_file(render_out, oc::render_svg(d));
      if (as_json)
        std::cout << json{{"command", echo}, {"in", render_in}, {"out", render_out}}.dump(2)
                  << '\n';
      return kOk;
    }
    if (cmd_bench->parsed()) return run_bench(bench_construction, bench_out, as_json, echo);
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
