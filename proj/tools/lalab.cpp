// lalab: build, compose and check local antimagic labelings.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "lalab/bounds.hpp"
#include "lalab/constructions.hpp"
#include "lalab/error.hpp"
#include "lalab/io.hpp"
#include "lalab/search.hpp"

namespace {

using namespace lalab;

constexpr int kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return in;
}

// Writes to --out when given, else stdout.
template <class F>
void emit(const std::string& out, F&& write) {
  if (out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw IoError("cannot write " + out);
  write(f);
  if (!f) throw IoError("write failed: " + out);
}

// "cycle:5", "complete-bipartite:2,3", "octahedron", ...
Graph graph_from_spec(const std::string& spec) {
  static const std::map<std::string, Family> names = {
      {"cycle", Family::cycle},
      {"null", Family::null},
      {"complete-bipartite", Family::complete_bipartite},
      {"prism", Family::prism},
      {"octahedron", Family::octahedron},
      {"path", Family::path},
      {"complete", Family::complete}};
  auto colon = spec.find(':');
  auto it = names.find(spec.substr(0, colon));
  if (it == names.end()) throw Error(ErrorKind::InvalidParameter, "unknown family " + spec);
  int a = 0, b = 0;
  if (colon != std::string::npos) {
    std::istringstream is(spec.substr(colon + 1));
    char comma = ',';
    if (!(is >> a) || ((is >> comma) && (comma != ',' || !(is >> b))) || !is.eof())
      throw Error(ErrorKind::InvalidParameter, "bad parameters in " + spec);
  }
  return generate(it->second, a, b);
}

Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    auto in = open_in(arg);
    return read_graph(in);
  }
  return graph_from_spec(arg);
}

EdgeLabeling load_labeling(const std::string& path) {
  auto in = open_in(path);
  return read_labeling(in);
}

int finish_certificate(const ConstructionCertificate& c, const std::string& out, bool matrix) {
  emit(out, [&](std::ostream& os) { write_certificate(os, c, matrix); });
  if (!out.empty()) write_report(std::cout, c.report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local antimagic labelings: constructions, verification and search"};
  app.require_subcommand(1);

  std::string out, family, file_a, file_b;
  int m = 0, n = 0, p = 0, max_colors = 3, workers = 1;
  std::uint64_t node_limit = 10'000'000, seed = 0;
  bool require_parity = false, emit_matrix = false, progress = false;

  auto* gen = app.add_subcommand("gen", "write a graph file");
  gen->add_option("family", family,
                  "cycle, null, complete-bipartite, prism, octahedron, path, complete")
      ->required();
  gen->add_option("--m", m, "first parameter (complete-bipartite: a)");
  gen->add_option("--n", n, "size parameter");
  gen->add_option("--out", out);

  auto* label = app.add_subcommand("label", "spread a labeling over copies (--p) or O_n (--n)");
  label->add_option("labeling", file_a)->required();
  auto* opt_p = label->add_option("--p", p, "number of copies");
  auto* opt_n = label->add_option("--n", n, "order of the null fiber");
  opt_p->excludes(opt_n);
  label->add_option("--out", out);
  label->add_flag("--emit-matrix", emit_matrix);

  auto* verify_cmd = app.add_subcommand("verify", "check a labeling or certificate");
  verify_cmd->add_option("labeling", file_a)->required();

  auto* compose = app.add_subcommand("compose", "label G[H] from labelings of G and H");
  compose->add_option("g-labeling", file_a)->required();
  compose->add_option("h-labeling", file_b)->required();
  compose->add_option("--out", out);
  compose->add_flag("--emit-matrix", emit_matrix);

  auto* join_label = app.add_subcommand("join-label", "3-colour C_2m v O_2n");
  join_label->add_option("m,--m", m)->required();
  join_label->add_option("n,--n", n)->required();
  join_label->add_option("--out", out);
  join_label->add_flag("--emit-matrix", emit_matrix);

  auto* bounds = app.add_subcommand("bounds", "lower bound for chi(G[H])");
  bounds->add_option("g-graph", file_a, "graph file or family spec such as prism:3")->required();
  bounds->add_option("h-graph", file_b)->required();
  bounds->add_option("--upper", p, "colour count of a known certificate");

  auto* search = app.add_subcommand("search", "backtracking search for a labeling");
  search->add_option("graph", file_a, "graph file or family spec")->required();
  search->add_option("--max-colors", max_colors);
  search->add_flag("--require-parity", require_parity);
  search->add_option("--node-limit", node_limit);
  search->add_option("--seed", seed);
  search->add_option("--workers", workers);
  search->add_flag("--progress", progress, "progress lines on stderr");
  search->add_option("--out", out);

  auto* chila = app.add_subcommand("chila", "exact local antimagic chromatic number");
  chila->add_option("graph", file_a)->required();
  chila->add_option("--out", out, "write the optimal labeling here");

  auto* dump = app.add_subcommand("dump", "print a matrix");
  dump->add_option("what", family, "square, rectangle, join-block or a labeling file")
      ->required();
  dump->add_option("--m", m);
  dump->add_option("--n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      Graph g = family.find(':') != std::string::npos ? graph_from_spec(family)
                : family == "complete-bipartite"        ? complete_bipartite(m, n)
                : family == "octahedron"                ? octahedron()
                                                        : graph_from_spec(family + ":" + std::to_string(n));
      emit(out, [&](std::ostream& os) { write_graph(os, g); });
      return kOk;
    }
    if (*label) {
      EdgeLabeling l = load_labeling(file_a);
      if (!*opt_p && !*opt_n) throw Error(ErrorKind::InvalidParameter, "give --p or --n");
      auto c = *opt_p ? expand_copies(l, p) : expand_null_fiber(l, n);
      return finish_certificate(c, out, emit_matrix);
    }
    if (*verify_cmd) {
      VerificationReport r = verify(load_labeling(file_a));
      write_report(std::cout, r);
      return r.is_local_antimagic ? kOk : kViolation;
    }
    if (*compose) {
      auto c = compose_lexi(load_labeling(file_a), load_labeling(file_b));
      return finish_certificate(c, out, emit_matrix);
    }
    if (*join_label) {
      return finish_certificate(label_join_cycle_null(m, n), out, emit_matrix);
    }
    if (*bounds) {
      BoundReport b = lexi_lower_bound(load_graph(file_a), load_graph(file_b));
      if (p > 0) b.upper = p;
      write_bounds(std::cout, b);
      return kOk;
    }
    if (*search) {
      SearchOptions opt;
      opt.max_colors = max_colors;
      opt.require_parity = require_parity;
      opt.node_limit = node_limit;
      opt.seed = seed;
      opt.workers = workers;
      if (progress) opt.progress = &std::cerr;
      SearchResult r = search_local_antimagic(load_graph(file_a), opt);
      if (r.labeling) emit(out, [&](std::ostream& os) { write_labeling(os, *r.labeling); });
      std::cout << "result=" << to_string(r.status) << "\n";
      return r.status == SearchStatus::found         ? kOk
             : r.status == SearchStatus::proven_none ? kViolation
                                                     : kBudget;
    }
    if (*chila) {
      ChiLaResult r = chi_la_exact(load_graph(file_a));
      if (!out.empty()) emit(out, [&](std::ostream& os) { write_labeling(os, r.witness); });
      std::cout << "chi_la=" << r.value << "\nproven=" << (r.proven ? "true" : "false") << "\n";
      return r.proven ? kOk : kBudget;
    }
    if (*dump) {
      IntMatrix mat;
      if (family == "square")
        mat = magic_square(n).entries;
      else if (family == "rectangle")
        mat = magic_rectangle(m, n).entries;
      else if (family == "join-block")
        mat = join_block(m, n, true);
      else
        mat = to_matrix(load_labeling(family)).entries;
      write_matrix(std::cout, mat);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ConditionViolation:
      case ErrorKind::ConstructionUnsound: return kViolation;
      default: return kUsage;
    }
  } catch (const IoError& e) {
    std::cerr << "error (io): " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
