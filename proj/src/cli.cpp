#include "domtk/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "domtk/cnf.hpp"
#include "domtk/domination.hpp"
#include "domtk/perturbation.hpp"
#include "domtk/reduction.hpp"
#include "domtk/verifier.hpp"

namespace domtk {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::set<ReductionTarget> parse_targets(const std::string& spec) {
  std::set<ReductionTarget> targets;
  std::istringstream in(spec);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name == "all") {
      return {ReductionTarget::kBondage, ReductionTarget::kTotalBondage,
              ReductionTarget::kReinforcement};
    } else if (name == "bondage") {
      targets.insert(ReductionTarget::kBondage);
    } else if (name == "total-bondage") {
      targets.insert(ReductionTarget::kTotalBondage);
    } else if (name == "reinforcement") {
      targets.insert(ReductionTarget::kReinforcement);
    } else {
      throw std::runtime_error("unknown target '" + name + "'");
    }
  }
  if (targets.empty()) throw std::runtime_error("empty target list");
  return targets;
}

std::string vertex_set_str(const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out << " ";
    first = false;
    out << v;
  });
  out << "}";
  return out.str();
}

std::string edge_set_str(const std::vector<Edge>& edges) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out << " ";
    out << edges[i].u << "-" << edges[i].v;
  }
  out << "}";
  return out.str();
}

int worker_count() {
  if (const char* env = std::getenv("DOMTK_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_solve(const std::string& param, const std::string& graph_path,
              int cap, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(graph_path));
  if (cap <= 0) cap = std::min(g.edge_count(), 3);
  if (param == "gamma") {
    DominationResult r = domination_number(g);
    out << "gamma = " << r.value << "\n";
    out << "witness = " << vertex_set_str(r.witness) << "\n";
  } else if (param == "gamma-t") {
    DominationResult r = total_domination_number(g);
    out << "gamma-t = " << r.value << "\n";
    out << "witness = " << vertex_set_str(r.witness) << "\n";
  } else {
    PerturbationResult r;
    if (param == "bondage")
      r = bondage_number(g, cap);
    else if (param == "total-bondage")
      r = total_bondage_number(g, cap);
    else
      r = reinforcement_number(g, std::min(cap, static_cast<int>(g.non_edges().size())));
    out << param << " = " << to_string(r) << "\n";
    out << "witness = " << edge_set_str(r.witness) << "\n";
  }
  return 0;
}

int run_reduce(const std::string& target_name, const std::string& cnf_path,
               const std::string& out_graph, const std::string& out_roles,
               const std::string& out_dot_path, std::ostream& out) {
  auto targets = parse_targets(target_name);
  if (targets.size() != 1)
    throw std::runtime_error("reduce expects a single target");
  const CnfFormula f = parse_dimacs(read_file(cnf_path));
  const ReductionArtifact art = build_instance(f, *targets.begin());
  write_file(out_graph, serialize(art.graph));
  write_file(out_roles, roles_json(art));
  if (!out_dot_path.empty()) write_file(out_dot_path, to_dot(art));
  out << "vertices: " << art.graph.vertex_count() << "\n";
  out << "edges: " << art.graph.edge_count() << "\n";
  return 0;
}

int run_verify(const std::string& cnf_path, const std::string& target_spec,
               const std::string& out_json, std::ostream& out) {
  const CnfFormula f = parse_dimacs(read_file(cnf_path));
  const VerificationReport report = verify(f, parse_targets(target_spec));
  if (!out_json.empty()) write_file(out_json, report_json(report));
  out << report_text(report);
  return report.all_passed() ? 0 : 2;
}

int run_fuzz(int n, int m, int count, std::uint64_t seed,
             const std::string& target_spec, std::ostream& out) {
  const auto targets = parse_targets(target_spec);
  std::vector<std::string> lines(static_cast<std::size_t>(count));
  std::vector<char> failed(static_cast<std::size_t>(count), 0);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      const CnfFormula f = random_formula(n, m, seed + static_cast<std::uint64_t>(i));
      const VerificationReport report = verify(f, targets);
      std::ostringstream line;
      line << "[" << i << "] n=" << n << " m=" << m << " sat="
           << (report.satisfiable ? "yes" : "no") << " "
           << (report.all_passed() ? "PASS" : "FAIL");
      if (!report.all_passed()) {
        failed[static_cast<std::size_t>(i)] = 1;
        for (const ClaimOutcome& c : report.claims)
          if (!c.passed) line << " " << c.id;
      }
      lines[static_cast<std::size_t>(i)] = line.str();
    }
  };
  const int workers = std::min(worker_count(), count);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int failures = 0;
  for (int i = 0; i < count; ++i) {
    out << lines[static_cast<std::size_t>(i)] << "\n";
    failures += failed[static_cast<std::size_t>(i)];
  }
  out << count - failures << "/" << count << " instances passed\n";
  return failures > 0 ? 2 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact domination, bondage and reinforcement toolkit"};
  app.require_subcommand(1);

  std::string param, graph_path;
  int cap = 0;  // 0 = default min(|E|, 3)
  CLI::App* solve = app.add_subcommand("solve", "Compute a graph parameter");
  solve->add_option("--param", param, "gamma|gamma-t|bondage|total-bondage|reinforcement")
      ->required()
      ->check(CLI::IsMember(
          {"gamma", "gamma-t", "bondage", "total-bondage", "reinforcement"}));
  solve->add_option("graph", graph_path, "edge-list file")->required();
  solve->add_option("--cap", cap,
                    "edge-subset size cap for perturbation searches "
                    "(default min(|E|, 3))");

  std::string target_name, cnf_path, out_graph, out_roles, out_dot_path;
  CLI::App* reduce =
      app.add_subcommand("reduce", "Build a gadget graph from a 3-SAT formula");
  reduce->add_option("--target", target_name,
                     "bondage|total-bondage|reinforcement")
      ->required();
  reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  reduce->add_option("--out-graph", out_graph, "edge-list output path")
      ->required();
  reduce->add_option("--out-roles", out_roles, "role-map JSON output path")
      ->required();
  reduce->add_option("--out-dot", out_dot_path, "optional DOT output path");

  std::string verify_targets = "all", out_json;
  std::string verify_cnf;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Machine-check the construction claims");
  verify_cmd->add_option("cnf", verify_cnf, "DIMACS CNF file")->required();
  verify_cmd->add_option("--targets", verify_targets,
                         "comma list of bondage,total-bondage,reinforcement or all");
  verify_cmd->add_option("--out-json", out_json, "JSON report output path");

  int fuzz_n = 0, fuzz_m = 0, fuzz_count = 0;
  std::uint64_t fuzz_seed = 0;
  std::string fuzz_targets = "all";
  CLI::App* fuzz =
      app.add_subcommand("fuzz", "Verify random formulas (workers: DOMTK_WORKERS)");
  fuzz->add_option("--n", fuzz_n, "variable count (>= 3)")->required();
  fuzz->add_option("--m", fuzz_m, "clause count")->required();
  fuzz->add_option("--count", fuzz_count, "number of formulas")->required();
  fuzz->add_option("--seed", fuzz_seed, "base RNG seed")->required();
  fuzz->add_option("--targets", fuzz_targets, "targets, as for verify");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());  // CLI11 consumes back-to-front
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*solve) return run_solve(param, graph_path, cap, out);
    if (*reduce)
      return run_reduce(target_name, cnf_path, out_graph, out_roles,
                        out_dot_path, out);
    if (*verify_cmd) return run_verify(verify_cnf, verify_targets, out_json, out);
    if (*fuzz) {
      if (fuzz_n < 3 || fuzz_m < 1 || fuzz_count < 1) {
        err << "error: fuzz requires n >= 3, m >= 1, count >= 1\n";
        return 1;
      }
      return run_fuzz(fuzz_n, fuzz_m, fuzz_count, fuzz_seed, fuzz_targets, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace domtk
