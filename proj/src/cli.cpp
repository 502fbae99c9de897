#include "sfvs/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include "sfvs/chordal.hpp"
#include "sfvs/errors.hpp"
#include "sfvs/io.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/reductions.hpp"
#include "sfvs/solver_leafage.hpp"
#include "sfvs/solver_rooted_path.hpp"

namespace sfvs {

namespace {

namespace fs = std::filesystem;

// Thrown by subcommands that finish with a non-zero verdict.
struct Verdict {
  int code;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidInput("bad list element '" + item + "'");
    out.push_back(v);
  }
  return out;
}

template <class F>
void write_file(const fs::path& path, F&& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path.string());
  body(f);
}

std::string fmt_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

// ---- solve ----

struct SolveArgs {
  std::string graph, model, algo = "auto";
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::size_t max_table = SolveOptions{}.max_table_entries;
  bool debug = false;
};

struct SolveOutcome {
  Solution sol;
  std::string algo;
  SolveStats stats;
};

SolveOutcome run_solver(const Instance& inst, const std::optional<TreeModel>& given,
                        const SolveArgs& a) {
  SolveOutcome res;
  SolveOptions opts;
  opts.max_table_entries = a.max_table;
  opts.debug_checks = a.debug;
  if (a.algo == "oracle") {
    auto start = std::chrono::steady_clock::now();
    auto o = brute_force_sfvs(inst, a.oracle_budget);
    if (o.timed_out)
      throw ResourceExceeded("oracle timeout after " + std::to_string(o.explored) + " search nodes");
    res.sol = o.solution;
    res.algo = "oracle";
    res.stats.millis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start).count();
    return res;
  }
  TreeModel model;
  if (given) {
    model = *given;
    require_valid(model, inst);
  } else {
    auto peo = recognize_chordal(inst);
    if (!peo) throw Verdict{kExitInfeasible};
    model = clique_tree_model(inst, *peo);
  }
  std::string algo = a.algo;
  if (algo == "auto") algo = is_rooted_path_model(model) ? "rooted-path" : "leafage";
  res.algo = algo;
  if (algo == "rooted-path")
    res.sol = solve_rooted_path(inst, model, opts, &res.stats);
  else
    res.sol = solve_bounded_leafage(inst, model, opts, &res.stats);
  return res;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = load_graph(a.graph);
  std::optional<TreeModel> model;
  if (!a.model.empty()) model = load_tree_model(a.model);
  SolveOutcome res;
  try {
    res = run_solver(inst, model, a);
  } catch (const Verdict& v) {
    err << "error: graph is not chordal and no model was given\n";
    return v.code;
  }
  const auto& s = res.stats;
  write_solution(out, res.sol,
                 {"algo=" + res.algo + " n=" + std::to_string(inst.n) +
                      " m=" + std::to_string(inst.num_edges()),
                  "leafage=" + std::to_string(s.leafage) +
                      " vertex_leafage=" + std::to_string(s.vertex_leafage) +
                      " components=" + std::to_string(s.components) +
                      " table=" + std::to_string(s.table_entries) +
                      " millis=" + fmt_ms(s.millis)});
  return kExitOk;
}

// ---- bench ----

struct BenchCase {
  std::string name;
  Instance inst;
  TreeModel model;
  std::string algo;
};

std::vector<BenchCase> bench_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<BenchCase> cases;
  auto add = [&](std::string name, int n, int leaves, int vl, RandomShape shape,
                 std::vector<std::string> algos, std::uint64_t s) {
    TreeModel model = gen_random_model(n, leaves, vl, s, shape);
    Instance inst = gen_random_instance(model, s);
    for (auto& algo : algos) cases.push_back({name, inst, model, algo});
  };
  if (suite == "rooted-path") {
    for (int n : {100, 200, 400, 500, 1000}) {
      RandomShape shape{2 * n, 20};
      add("rp-n" + std::to_string(n), n, 8, 1, shape, {"rooted-path"}, seed + n);
    }
  } else if (suite == "leafage") {
    for (int l : {2, 3, 4})
      for (int n : {20, 40, 60}) {
        RandomShape shape{n, 6};
        add("lf-l" + std::to_string(l) + "-n" + std::to_string(n), n, l, l, shape,
            {"leafage"}, seed + 100 * l + n);
      }
  } else if (suite == "cross") {
    for (int n : {14, 30, 60}) {
      RandomShape shape{n, 8};
      add("x-n" + std::to_string(n), n, 3, 1, shape, {"rooted-path", "leafage"}, seed + n);
      if (n <= 14) cases.push_back({cases.back().name, cases.back().inst, cases.back().model, "oracle"});
    }
  } else {
    throw InvalidInput("unknown bench suite '" + suite + "' (rooted-path, leafage, cross)");
  }
  return cases;
}

int cmd_bench(const std::string& suite, std::uint64_t seed, int jobs, std::ostream& out) {
  auto cases = bench_suite(suite, seed);
  struct Row {
    double millis;
    Weight weight;
    int leafage;
  };
  auto run = [](const BenchCase& c) {
    SolveArgs a;
    a.algo = c.algo;
    auto res = run_solver(c.inst, c.model, a);
    int leaves = c.algo == "oracle" ? 0 : res.stats.leafage;
    return Row{res.stats.millis, res.sol.kept_weight, leaves};
  };
  std::vector<Row> rows(cases.size());
  jobs = std::max(1, jobs);
  for (std::size_t start = 0; start < cases.size(); start += jobs) {
    std::vector<std::future<Row>> batch;
    for (std::size_t i = start; i < std::min(cases.size(), start + jobs); ++i)
      batch.push_back(std::async(std::launch::async, run, std::cref(cases[i])));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start + i] = batch[i].get();
  }
  out << "# suite=" << suite << " seed=" << seed << '\n';
  out << "name\tn\tm\tleafage\talgo\tmillis\tkept_weight\n";
  for (std::size_t i = 0; i < cases.size(); ++i)
    out << cases[i].name << '\t' << cases[i].inst.n << '\t' << cases[i].inst.num_edges()
        << '\t' << rows[i].leafage << '\t' << cases[i].algo << '\t' << fmt_ms(rows[i].millis)
        << '\t' << rows[i].weight << '\n';
  return kExitOk;
}

// ---- gadgets ----

void emit_instance(const fs::path& dir, const Instance& inst, const TreeModel& model,
                   const std::vector<std::string>& comments) {
  write_file(dir / "graph.txt", [&](std::ostream& f) { write_graph(f, inst, comments); });
  write_file(dir / "model.txt", [&](std::ostream& f) { write_tree_model(f, model, comments); });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subset feedback vertex set on chordal graphs via tree models"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Maximum-weight S-forest of a graph");
  solve->add_option("--graph", solve_args.graph, "graph file")->required();
  solve->add_option("--model", solve_args.model, "tree model file (default: clique tree)");
  solve->add_option("--algo", solve_args.algo, "auto|leafage|rooted-path|oracle")
      ->check(CLI::IsMember({"auto", "leafage", "rooted-path", "oracle"}));
  solve->add_option("--oracle-budget", solve_args.oracle_budget, "oracle search-node limit");
  solve->add_option("--max-table", solve_args.max_table, "memo entries allowed per component");
  solve->add_flag("--debug", solve_args.debug, "cross-check every table entry");

  std::string v_graph, v_model;
  auto* validate = app.add_subcommand("validate", "Check that a tree model realizes a graph");
  validate->add_option("--graph", v_graph)->required();
  validate->add_option("--model", v_model)->required();

  std::string e_model;
  bool e_keep_root = false;
  auto* expand = app.add_subcommand("expand", "Print the expanded tree model");
  expand->add_option("--model", e_model)->required();
  expand->add_flag("--keep-root", e_keep_root, "root at the declared root instead of the first non-leaf");

  std::string f_graph, f_solution;
  auto* verify = app.add_subcommand("verify", "Check a solution file");
  verify->add_option("--graph", f_graph)->required();
  verify->add_option("--solution", f_solution)->required();

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  int g_n = 10, g_leaves = 3, g_vl = 2, g_host = 0, g_growth = 0;
  std::uint64_t g_seed = 1;
  Weight g_maxw = 10;
  double g_sprob = 0.5;
  std::string g_out;
  auto* gen_random = gen->add_subcommand("random", "Random tree model and its weighted graph");
  gen_random->add_option("--n", g_n)->required();
  gen_random->add_option("--leafage", g_leaves)->required();
  gen_random->add_option("--vertex-leafage", g_vl)->required();
  gen_random->add_option("--seed", g_seed)->required();
  gen_random->add_option("--host-nodes", g_host, "host size (0: random)");
  gen_random->add_option("--growth", g_growth, "max subtree growth steps (0: host/2)");
  gen_random->add_option("--max-weight", g_maxw);
  gen_random->add_option("--s-prob", g_sprob);
  gen_random->add_option("--out-dir", g_out, "write graph.txt and model.txt here instead of stdout");

  std::string gm_graph, gm_out;
  auto* gen_maxcut = gen->add_subcommand("maxcut", "Max-Cut gadget of a plain graph");
  gen_maxcut->add_option("--graph", gm_graph)->required();
  gen_maxcut->add_option("--out-dir", gm_out)->required();

  std::string gc_mcc, gc_out;
  auto* gen_mcc = gen->add_subcommand("mcc", "Multicolored-clique gadget");
  gen_mcc->add_option("--mcc", gc_mcc)->required();
  gen_mcc->add_option("--out-dir", gc_out)->required();

  auto* cert = app.add_subcommand("cert", "Forward certificates for the gadgets");
  cert->require_subcommand(1);
  std::string cm_dir, cm_aside;
  auto* cert_maxcut = cert->add_subcommand("maxcut", "Certificate for a cut side A");
  cert_maxcut->add_option("--gadget-dir", cm_dir)->required();
  cert_maxcut->add_option("--aside", cm_aside, "comma-separated base vertices")->required();
  std::string cc_dir, cc_clique;
  auto* cert_mcc = cert->add_subcommand("mcc", "Certificate for a multicolored clique");
  cert_mcc->add_option("--gadget-dir", cc_dir)->required();
  cert_mcc->add_option("--clique", cc_clique, "a_1,...,a_k (1-based)")->required();

  std::string b_suite;
  std::uint64_t b_seed = 1;
  int b_jobs = 1;
  auto* bench = app.add_subcommand("bench", "Timing table for a built-in suite");
  bench->add_option("--suite", b_suite, "rooted-path|leafage|cross")->required();
  bench->add_option("--seed", b_seed);
  bench->add_option("--jobs", b_jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*solve) return cmd_solve(solve_args, out, err);

    if (*validate) {
      auto rep = validate_model(load_tree_model(v_model), load_graph(v_graph));
      if (rep.ok()) {
        out << "ok\n";
        return kExitOk;
      }
      for (const auto& v : rep.violations) out << "violation: " << v << '\n';
      return kExitBadInput;
    }

    if (*expand) {
      TreeModel model = load_tree_model(e_model);
      auto em = expand_model(model, e_keep_root ? RootPolicy::kKeepDeclared
                                                : RootPolicy::kFirstNonLeaf);
      write_tree_model(out, em.model,
                       {"expanded from " + std::to_string(model.num_nodes) + " nodes",
                        "leafage=" + std::to_string(leafage(em)) +
                            " vertex_leafage=" + std::to_string(vertex_leafage(em))});
      return kExitOk;
    }

    if (*verify) {
      Instance inst = load_graph(f_graph);
      SolutionRecord rec = load_solution(f_solution);
      auto v = verify_sfvs(inst, rec.removed);
      if (v.removed_weight != rec.removed_weight ||
          inst.total_weight() - v.removed_weight != rec.kept_weight) {
        err << "error: header weights " << rec.removed_weight << ' ' << rec.kept_weight
            << " do not match the removed set (" << v.removed_weight << ' '
            << inst.total_weight() - v.removed_weight << ")\n";
        return kExitBadInput;
      }
      out << (v.feasible ? "feasible" : "infeasible") << " removed_weight=" << v.removed_weight
          << '\n';
      return v.feasible ? kExitOk : kExitInfeasible;
    }

    if (*gen_random) {
      RandomShape shape{g_host, g_growth};
      TreeModel model = gen_random_model(g_n, g_leaves, g_vl, g_seed, shape);
      Instance inst = gen_random_instance(model, g_seed, g_maxw, g_sprob);
      std::ostringstream sprob;
      sprob << g_sprob;
      std::vector<std::string> header{
          "gen random seed=" + std::to_string(g_seed) + " n=" + std::to_string(g_n) +
          " leafage=" + std::to_string(g_leaves) + " vertex-leafage=" + std::to_string(g_vl) +
          " host-nodes=" + std::to_string(g_host) + " growth=" + std::to_string(g_growth) +
          " max-weight=" + std::to_string(g_maxw) + " s-prob=" + sprob.str()};
      if (!g_out.empty()) {
        emit_instance(g_out, inst, model, header);
      } else {
        write_graph(out, inst, header);
        write_tree_model(out, model);
      }
      return kExitOk;
    }

    if (*gen_maxcut) {
      Instance base = load_graph(gm_graph);
      auto g = maxcut_gadget(base);
      fs::path dir = gm_out;
      write_file(dir / "base.txt", [&](std::ostream& f) { write_graph(f, base); });
      emit_instance(dir, g.inst, g.model,
                    {"max-cut gadget of a base graph with n=" + std::to_string(base.n) +
                     " m=" + std::to_string(base.num_edges())});
      out << "vertices=" << g.inst.n << " edges=" << g.inst.num_edges()
          << " nodes=" << g.model.num_nodes << '\n';
      return kExitOk;
    }

    if (*gen_mcc) {
      MccInstance mcc = load_mcc(gc_mcc);
      auto g = mcc_gadget(mcc);
      fs::path dir = gc_out;
      write_file(dir / "base.mcc", [&](std::ostream& f) { write_mcc(f, mcc); });
      emit_instance(dir, g.inst, g.model,
                    {"mcc gadget k=" + std::to_string(mcc.k) + " p=" + std::to_string(mcc.p) +
                         " m=" + std::to_string(mcc.edges.size()),
                     "scale=2 (weights doubled)",
                     std::string("equivalence_threshold_met=") +
                         (g.equivalence_threshold_met ? "1" : "0 (k < 10)")});
      out << "vertices=" << g.inst.n << " edges=" << g.inst.num_edges()
          << " nodes=" << g.model.num_nodes << " host_leaves=" << host_leaves(g.model).size()
          << '\n';
      return kExitOk;
    }

    if (*cert_maxcut) {
      Instance base = load_graph((fs::path(cm_dir) / "base.txt").string());
      auto g = maxcut_gadget(base);
      auto side = parse_list(cm_aside);
      VertexSet a(side.begin(), side.end());
      std::sort(a.begin(), a.end());
      auto U = maxcut_certificate(g, a);
      VertexSet kept = set_difference(
          [&] {
            VertexSet all(g.inst.n);
            for (Vertex v = 0; v < g.inst.n; ++v) all[v] = v;
            return all;
          }(),
          U);
      write_solution(out, make_solution(g.inst, kept),
                     {"max-cut certificate cut=" + std::to_string(cut_size(base, a)) +
                      " size=" + std::to_string(U.size())});
      return kExitOk;
    }

    if (*cert_mcc) {
      MccInstance mcc = load_mcc((fs::path(cc_dir) / "base.mcc").string());
      auto g = mcc_gadget(mcc);
      auto clique = parse_list(cc_clique);
      auto U = mcc_certificate(g, clique);
      VertexSet all(g.inst.n);
      for (Vertex v = 0; v < g.inst.n; ++v) all[v] = v;
      write_solution(out, make_solution(g.inst, set_difference(all, U)),
                     {"mcc certificate scale=2 expected_weight=" +
                      std::to_string(mcc_certificate_weight(mcc.k, mcc.p,
                                                            static_cast<int>(mcc.edges.size())))});
      return kExitOk;
    }

    if (*bench) return cmd_bench(b_suite, b_seed, b_jobs, out);
  } catch (const ResourceExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitBadInput;
}

}  // namespace sfvs
