#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tsw/bounds.hpp"
#include "tsw/colored.hpp"
#include "tsw/error.hpp"
#include "tsw/exact.hpp"
#include "tsw/feasibility.hpp"
#include "tsw/fo.hpp"
#include "tsw/generators.hpp"
#include "tsw/io.hpp"
#include "tsw/kernel.hpp"

namespace tsw::cli {
namespace {

constexpr const char* kVersion = "tsw 0.1.0";

struct Outcome {
  std::string out;
  std::string err;
  int code = kYes;
};

// Runs body(out, err) and turns library exceptions into exit codes.
Outcome guarded(const std::function<int(std::ostream&, std::ostream&)>& body) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome r;
  try {
    r.code = body(out, err);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    r.code = kResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    r.code = kResource;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    r.code = kUsage;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << "\n";
    r.code = kNo;
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

std::string stats_line(std::optional<std::size_t> length, std::size_t states,
                       const std::optional<ClassCounts>& counts) {
  std::ostringstream s;
  s << "stats length=";
  if (length) {
    s << *length;
  } else {
    s << "none";
  }
  s << " states=" << states;
  if (counts) s << " class_counts=" << format_class_counts(*counts);
  s << "\n";
  return s.str();
}

// ---- solve ---------------------------------------------------------------

struct SolveOptions {
  std::string algo = "bfs";
  std::optional<int> k;
  std::size_t max_states = BfsOptions{}.max_states;
  std::size_t max_expansions = IdaOptions{}.max_expansions;
  int max_vertices = ReachOptions{}.max_vertices;
  int jobs = 1;
  std::vector<std::string> files;
};

int solve_text(const std::string& text, const SolveOptions& o, std::ostream& out, std::ostream&) {
  const Instance inst = parse_bundle(text).instance;
  const Configuration start = Configuration::identity(inst.size());
  if ((o.algo == "bounded" || o.algo == "reach") && !o.k)
    throw InvalidInput("--algo " + o.algo + " needs --k");

  if (o.algo == "reach") {
    const bool yes = solve_via_reach(inst, start, *o.k, {o.max_vertices});
    out << "reach k=" << *o.k << " result=" << (yes ? "yes" : "no") << "\n";
    return yes ? kYes : kNo;
  }

  SolveStats stats;
  std::optional<SwapSequence> sol;
  if (o.algo == "bfs") {
    sol = solve_bfs(inst, start, {o.k, o.max_states}, &stats);
  } else if (o.algo == "bounded") {
    sol = solve_bounded(inst, start, *o.k, &stats);
  } else if (o.algo == "ida") {
    sol = solve_ida(inst, start, {o.max_expansions}, &stats);
  } else {
    sol = solve_special(inst, start);
  }
  if (sol && o.k && static_cast<long long>(sol->size()) > *o.k) sol.reset();

  if (!sol) {
    if (!check_feasible(inst).feasible) {
      out << "# no solution: no placement satisfies every destination set\n";
    } else if (o.k) {
      out << "# no solution within k=" << *o.k << "\n";
    } else {
      out << "# no solution: some token cannot reach its destinations\n";
    }
    out << stats_line(std::nullopt, stats.states, std::nullopt);
    return kNo;
  }
  out << serialize_solution(*sol);
  out << stats_line(sol->size(), stats.states, classify_sequence(inst, start, *sol));
  return kYes;
}

int run_solve(const SolveOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  // Inputs are read up front so '-' is consumed once, on this thread.
  std::vector<Outcome> results(o.files.size());
  std::vector<std::optional<std::string>> texts(o.files.size());
  for (std::size_t i = 0; i < o.files.size(); ++i) {
    Outcome r = guarded([&](std::ostream&, std::ostream&) {
      texts[i] = read_text(o.files[i], in);
      return kYes;
    });
    if (r.code != kYes) results[i] = std::move(r);
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < o.files.size();) {
      if (!texts[i]) continue;
      results[i] = guarded([&](std::ostream& os, std::ostream& es) {
        return solve_text(*texts[i], o, os, es);
      });
    }
  };
  const int threads = std::max(1, std::min<int>(o.jobs, static_cast<int>(o.files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kYes;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (o.files.size() > 1) out << "# " << o.files[i] << "\n";
    out << results[i].out;
    err << results[i].err;
    code = std::max(code, results[i].code);
  }
  return code;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::vector<std::string>& files, std::istream& in, std::ostream& out,
               std::ostream&) {
  Bundle bundle = parse_bundle(read_text(files[0], in));
  if (files.size() == 2) {
    bundle.solution = parse_solution(read_text(files[1], in));
  } else if (!bundle.solution) {
    throw InvalidInput("input has no solution; pass a solution file or a bundle");
  }
  const Configuration start = Configuration::identity(bundle.instance.size());
  const VerificationReport r = verify_solution(bundle.instance, start, *bundle.solution);
  if (!r.valid) {
    out << "invalid length=" << r.length << " reason=\"" << r.reason << "\"\n";
    return kNo;
  }
  out << "valid length=" << r.length;
  if (bundle.budget) out << " budget=" << *bundle.budget;
  const bool over = bundle.budget && static_cast<long long>(r.length) > *bundle.budget;
  if (over) out << " over-budget";
  out << "\n" << stats_line(r.length, 0, r.class_counts);
  return over ? kNo : kYes;
}

// ---- gen -------------------------------------------------------------------

std::string describe(const gen::GeneratedInstance& g, const std::string& kind) {
  std::ostringstream s;
  s << "# tsw gen " << kind << "\n# source " << g.provenance.source;
  for (const auto& [key, value] : g.provenance.params) s << " " << key << "=" << value;
  s << "\n";
  for (const auto& seg : g.provenance.segments)
    s << "# segment \"" << seg.label << "\" swaps=" << seg.swaps.size() << "\n";
  for (std::size_t v = 0; v < g.roles.size(); ++v)
    if (!g.roles[v].empty()) s << "# vertex " << v << ": " << g.roles[v] << "\n";
  Bundle b{g.instance, g.budget, g.certificate};
  s << serialize_bundle(b);
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Token swapping toolkit: exact solvers, kernels, bounds, special cases "
               "and reduction generators.",
               "tsw"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "solve instances and print the swap sequence");
  solve->add_option("--algo", so.algo, "bfs | bounded | reach | ida | special")
      ->check(CLI::IsMember({"bfs", "bounded", "reach", "ida", "special"}));
  solve->add_option("--k", so.k, "swap budget")->check(CLI::NonNegativeNumber);
  solve->add_option("--max-states", so.max_states, "BFS state cap");
  solve->add_option("--max-expansions", so.max_expansions, "IDA node-expansion cap");
  solve->add_option("--max-vertices", so.max_vertices, "reach enumeration vertex cap");
  solve->add_option("--jobs", so.jobs, "solve files in parallel")->check(CLI::PositiveNumber);
  solve->add_option("files", so.files, "instance files ('-' for stdin)")->required();

  std::vector<std::string> verify_files;
  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("files", verify_files, "<instance> <solution>, or one bundle ('-' for stdin)")
      ->required()
      ->expected(1, 2);

  std::string feasible_file;
  auto* feasible = app.add_subcommand("feasible", "check that some target placement exists");
  feasible->add_option("file", feasible_file)->required();

  int kernel_k = 0;
  std::string kernel_file;
  std::string kernel_out = "-";
  auto* kern = app.add_subcommand("kernelize", "trim the instance to the radius-k ball");
  kern->add_option("--k", kernel_k, "swap budget")->required()->check(CLI::NonNegativeNumber);
  kern->add_option("-o,--output", kernel_out, "output file");
  kern->add_option("file", kernel_file)->required();

  std::optional<int> bound_r;
  std::string bound_file;
  auto* bound = app.add_subcommand("bound", "print the distance lower bound");
  bound->add_option("--r", bound_r, "also print r*n for a P_{r+1}-free graph");
  bound->add_option("file", bound_file)->required();

  auto* gen = app.add_subcommand("gen", "generate reduction instances");
  gen->require_subcommand(1);
  std::string gen_out = "-";
  gen->add_option("-o,--output", gen_out, "output file");
  int linker_a = 0;
  int linker_b = 0;
  auto* g_linker = gen->add_subcommand("linker", "standalone linker gadget L_{a,b}");
  g_linker->add_option("a", linker_a)->required()->check(CLI::PositiveNumber);
  g_linker->add_option("b", linker_b)->required()->check(CLI::PositiveNumber);
  struct SourceArgs {
    std::string file;
    std::optional<std::string> certificate;
  };
  SourceArgs w1_args, tree_args, star_args, clique_args;
  auto add_source = [&](const char* name, const char* help, SourceArgs& a, const char* what) {
    auto* sub = gen->add_subcommand(name, help);
    sub->add_option("file", a.file, what)->required();
    sub->add_option("--certificate", a.certificate, "source-problem solution file");
    return sub;
  };
  auto* g_w1 = add_source("w1", "linker reduction from multicolored subgraph isomorphism", w1_args,
                          "msi file");
  auto* g_tree = add_source("almost-tree", "set-gadget reduction from exact cover by 3-sets",
                            tree_args, "x3c file");
  auto* g_star = add_source("star-sts", "star subset instance from a digraph", star_args,
                            "digraph file");
  auto* g_clique = add_source("clique-cts", "clique colored instance from an Eulerian digraph",
                              clique_args, "digraph file");

  int fo_k = 1;
  std::optional<std::string> fo_eval;
  auto* fo = app.add_subcommand("fo", "emit the first-order formula for k swaps");
  fo->add_option("--k", fo_k, "swap budget")->required()->check(CLI::PositiveNumber);
  fo->add_option("--eval", fo_eval, "evaluate on an instance instead of printing");

  std::vector<std::string> argv_store{"tsw"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  if (solve->parsed()) return run_solve(so, in, out, err);

  Outcome r = guarded([&](std::ostream& os, std::ostream& es) -> int {
    if (verify->parsed()) return run_verify(verify_files, in, os, es);
    if (feasible->parsed()) {
      const Instance inst = parse_bundle(read_text(feasible_file, in)).instance;
      const MatchingResult m = check_feasible(inst);
      if (!m.feasible) {
        os << "infeasible matched=" << m.matched << "/" << inst.size() << "\n";
        return kNo;
      }
      os << "feasible\n";
      for (int t = 0; t < inst.size(); ++t) os << "m " << t << " " << (*m.assignment)[t] << "\n";
      return kYes;
    }
    if (kern->parsed()) {
      const Instance inst = parse_bundle(read_text(kernel_file, in)).instance;
      const KernelResult kr = kernelize(inst, kernel_k);
      if (kr.verdict == KernelVerdict::no) {
        os << "verdict no\n";
        return kNo;
      }
      std::ostringstream text;
      text << "# kernel for k=" << kernel_k << ": " << kr.vertices.size() << " of " << inst.size()
           << " vertices kept\n";
      for (std::size_t i = 0; i < kr.vertices.size(); ++i)
        text << "# map " << kr.vertices[i] << " " << i << "\n";
      text << serialize_instance(*kr.kernel);
      write_output(kernel_out, text.str(), os);
      return kYes;
    }
    if (bound->parsed()) {
      const Instance inst = parse_bundle(read_text(bound_file, in)).instance;
      os << "lower=" << lower_bound(inst, Configuration::identity(inst.size())) << "\n";
      if (bound_r) os << "upper=" << upper_bound_pr_free(inst, *bound_r) << "\n";
      return kYes;
    }
    if (gen->parsed()) {
      std::string text;
      if (g_linker->parsed()) {
        text = describe(gen::gen_linker(linker_a, linker_b), "linker");
      } else if (g_w1->parsed()) {
        const auto msi = gen::parse_msi(read_text(w1_args.file, in));
        std::optional<gen::MsiSolution> sol;
        if (w1_args.certificate) sol = gen::parse_msi_solution(read_text(*w1_args.certificate, in));
        text = describe(gen::gen_w1_instance(msi, sol), "w1");
      } else if (g_tree->parsed()) {
        const auto x3c = gen::parse_x3c(read_text(tree_args.file, in));
        std::optional<gen::X3cCover> cover;
        if (tree_args.certificate) cover = gen::parse_x3c_cover(read_text(*tree_args.certificate, in));
        text = describe(gen::gen_almost_tree(x3c, cover), "almost-tree");
      } else if (g_star->parsed()) {
        const auto h = gen::parse_digraph(read_text(star_args.file, in));
        std::optional<std::vector<int>> cycle;
        if (star_args.certificate) cycle = gen::parse_hamcycle(read_text(*star_args.certificate, in));
        text = describe(gen::gen_star_sts(h, cycle), "star-sts");
      } else if (g_clique->parsed()) {
        const auto h = gen::parse_digraph(read_text(clique_args.file, in));
        std::optional<gen::TriangleDecomposition> tri;
        if (clique_args.certificate) tri = gen::parse_triangles(read_text(*clique_args.certificate, in));
        text = describe(gen::gen_clique_cts(h, tri), "clique-cts");
      }
      write_output(gen_out, text, os);
      return kYes;
    }
    // fo
    if (fo_eval) {
      const Instance inst = parse_bundle(read_text(*fo_eval, in)).instance;
      const bool yes = fo::eval_formula_naive(inst, fo_k);
      os << "eval k=" << fo_k << " result=" << (yes ? "yes" : "no") << "\n";
      return yes ? kYes : kNo;
    }
    os << fo::emit_formula(fo_k);
    return kYes;
  });
  out << r.out;
  err << r.err;
  return r.code;
}

}  // namespace tsw::cli
