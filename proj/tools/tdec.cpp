// tdec: exact total dominator edge chromatic numbers at desk scale.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdec/bounds.hpp"
#include "tdec/coloring.hpp"
#include "tdec/families.hpp"
#include "tdec/formats.hpp"
#include "tdec/solver.hpp"
#include "tdec/suites.hpp"
#include "tdec/surgery.hpp"

namespace {

// exit codes: 0 ok/exact, 1 usage or IO/parse error, 2 infeasible,
// 3 timed out, 4 failed validation or failed suite records
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimedOut = 3;
constexpr int kExitCheckFailed = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tdec::Error(tdec::ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tdec::Error(tdec::ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << content;
}

tdec::Graph load_graph(const std::string& path, bool graph6) {
  std::string text = read_input(path);
  if (!graph6) return tdec::parse_edge_list(text);
  auto graphs = tdec::parse_graph6(text);
  if (graphs.empty())
    throw tdec::Error(tdec::ErrorKind::ParseError, "no graph6 record in '" + path + "'");
  return graphs.front();
}

tdec::Graph apply_transform(const tdec::Graph& g, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw tdec::Error(tdec::ErrorKind::ParseError, "op spec '" + spec + "' missing ':'");
  std::string op = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  auto parse_pair = [&](char sep) {
    auto at = arg.find(sep);
    if (at == std::string::npos)
      throw tdec::Error(tdec::ErrorKind::ParseError, "op '" + op + "' needs 'u" +
                                                         std::string(1, sep) + "v'");
    return std::pair{std::stoi(arg.substr(0, at)), std::stoi(arg.substr(at + 1))};
  };
  if (op == "subdivide") return tdec::subdivide(g, std::stoi(arg)).graph;
  if (op == "delete-vertex") return tdec::delete_vertex(g, std::stoi(arg)).graph;
  if (op == "delete-edge") {
    auto [u, v] = parse_pair('-');
    int e = g.edge_id(u, v);
    if (e < 0)
      throw tdec::Error(tdec::ErrorKind::EdgeOutOfRange, "no edge (" + arg + ") in graph");
    return tdec::delete_edge(g, e);
  }
  if (op == "contract") {
    auto [u, v] = parse_pair('-');
    int e = g.edge_id(u, v);
    if (e < 0)
      throw tdec::Error(tdec::ErrorKind::EdgeOutOfRange, "no edge (" + arg + ") in graph");
    return tdec::contract_edge(g, e).graph;
  }
  throw tdec::Error(tdec::ErrorKind::ParseError, "unknown op '" + op + "'");
}

}  // namespace

static int run_app(int argc, char** argv) {
  CLI::App app{"total dominator edge chromatic number toolkit"};
  app.require_subcommand(1);

  // gen
  std::string gen_spec, gen_out = "-";
  auto* gen = app.add_subcommand("gen", "generate a family graph as an edge-list file");
  gen->add_option("family", gen_spec,
                  "family spec: path:N cycle:N complete:N complete-bipartite:A,B star:N "
                  "wheel:N friendship:N")
      ->required();
  gen->add_option("-o,--output", gen_out, "output file ('-' for stdout)");

  // solve
  std::string solve_path, solve_method = "exact";
  double solve_timeout = 60.0;
  bool solve_g6 = false;
  auto* solve = app.add_subcommand("solve", "compute the exact TDEC number");
  solve->add_option("graph", solve_path, "edge-list file ('-' for stdin)")->required();
  solve->add_option("--timeout", solve_timeout, "per-solve timeout in seconds");
  solve->add_option("--method", solve_method, "exact | oracle")
      ->check(CLI::IsMember({"exact", "oracle"}));
  solve->add_flag("--g6", solve_g6, "input is graph6");

  // bounds
  std::string bounds_path;
  bool bounds_g6 = false;
  auto* bounds = app.add_subcommand("bounds", "report theorem-tagged TDEC bounds");
  bounds->add_option("graph", bounds_path)->required();
  bounds->add_flag("--g6", bounds_g6, "input is graph6");

  // validate
  std::string val_graph, val_coloring;
  bool val_g6 = false;
  auto* validate_cmd = app.add_subcommand("validate", "check a coloring file against a graph");
  validate_cmd->add_option("graph", val_graph)->required();
  validate_cmd->add_option("coloring", val_coloring, "JSON {\"k\": int, \"colors\": [...]}")
      ->required();
  validate_cmd->add_flag("--g6", val_g6, "graph input is graph6");

  // transform
  std::string tr_graph, tr_op, tr_out = "-";
  bool tr_g6 = false;
  auto* transform = app.add_subcommand("transform", "apply graph surgery and write the result");
  transform->add_option("graph", tr_graph)->required();
  transform->add_option("--op", tr_op,
                        "subdivide:K | delete-vertex:V | delete-edge:U-V | contract:U-V")
      ->required();
  transform->add_option("-o,--output", tr_out, "output file ('-' for stdout)");
  transform->add_flag("--g6", tr_g6, "input is graph6");

  // verify
  std::string ver_suite, ver_format = "json";
  int ver_max_n = -1, ver_threads = 0, ver_enum_cap = 5, ver_solve_cap = 16;
  double ver_timeout = 60.0;
  bool ver_no_meta = false;
  auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
  std::string registry_help;
  for (const auto& id : tdec::suite_registry()) registry_help += id + " ";
  verify->add_option("suite", ver_suite, "one of: " + registry_help)->required();
  verify->add_option("--max-n", ver_max_n, "suite scale override");
  verify->add_option("--format", ver_format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_flag("--no-meta", ver_no_meta, "omit timestamps and runtimes (byte-stable output)");
  verify->add_option("--timeout", ver_timeout, "per-instance solver timeout in seconds");
  verify->add_option("--enum-cap", ver_enum_cap, "max vertices for the labeled corpus");
  verify->add_option("--solve-cap", ver_solve_cap, "max edges for corpus exact solves");
  verify->add_option("--threads", ver_threads, "worker pool size (default: TDEC_THREADS env)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      auto g = tdec::gen_family(tdec::parse_family_spec(gen_spec));
      write_output(gen_out, tdec::serialize_edge_list(g));
      return 0;
    }
    if (solve->parsed()) {
      auto g = load_graph(solve_path, solve_g6);
      if (solve_method == "oracle") {
        auto value = tdec::solve_oracle_enumeration(g, g.edge_count());
        tdec::SolveResult result;
        result.status = value ? tdec::SolveStatus::Exact : tdec::SolveStatus::Infeasible;
        result.value = value;
        if (value) result.proven_lower = result.proven_upper = *value;
        std::cout << tdec::solve_result_to_json(result) << "\n";
        return value ? 0 : kExitInfeasible;
      }
      tdec::SolverOptions opts;
      opts.timeout = std::chrono::milliseconds(static_cast<long long>(solve_timeout * 1000));
      auto result = tdec::solve_exact(g, opts);
      std::cout << tdec::solve_result_to_json(result) << "\n";
      switch (result.status) {
        case tdec::SolveStatus::Exact: return 0;
        case tdec::SolveStatus::Infeasible: return kExitInfeasible;
        case tdec::SolveStatus::TimedOut: return kExitTimedOut;
      }
    }
    if (bounds->parsed()) {
      auto g = load_graph(bounds_path, bounds_g6);
      std::cout << tdec::bounds_to_json(tdec::bounds_for_graph(g)) << "\n";
      return 0;
    }
    if (validate_cmd->parsed()) {
      auto g = load_graph(val_graph, val_g6);
      auto coloring = tdec::coloring_from_json(read_input(val_coloring));
      auto report = tdec::validate(g, coloring);
      std::cout << tdec::tde_report_to_json(report) << "\n";
      return report.valid() ? 0 : kExitCheckFailed;
    }
    if (transform->parsed()) {
      auto g = load_graph(tr_graph, tr_g6);
      write_output(tr_out, tdec::serialize_edge_list(apply_transform(g, tr_op)));
      return 0;
    }
    if (verify->parsed()) {
      tdec::RunConfig config;
      if (ver_max_n > 0) config.max_n = ver_max_n;
      config.instance_timeout =
          std::chrono::milliseconds(static_cast<long long>(ver_timeout * 1000));
      config.enum_cap = ver_enum_cap;
      config.solve_cap_edges = ver_solve_cap;
      config.threads = ver_threads;
      config.include_meta = !ver_no_meta;
      auto result = tdec::run_suite(ver_suite, config);
      if (ver_format == "json") std::cout << tdec::suite_to_json(result, config);
      else if (ver_format == "csv") std::cout << tdec::suite_to_csv(result, config);
      else std::cout << tdec::suite_to_table(result);
      std::cout.flush();
      return result.all_passed() ? 0 : kExitCheckFailed;
    }
  } catch (const tdec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

int main(int argc, char** argv) try {
  return run_app(argc, argv);
} catch (const std::exception& e) {
  std::cerr << "fatal: " << e.what() << "\n";
  return kExitError;
}
