#include "lalab/io.hpp"

#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "lalab/error.hpp"

namespace lalab {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-blank, non-comment line.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      line = line.substr(start);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
  }
};

template <class... T>
bool scan(const std::string& line, T&... out) {
  std::istringstream is(line);
  (is >> ... >> out);
  std::string rest;
  return !is.fail() && !(is >> rest);
}

bool starts_with(const std::string& s, const char* word) {
  std::istringstream is(s);
  std::string first;
  is >> first;
  return first == word;
}

std::vector<int> parse_order(LineReader& r, const std::string& line, int p) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  std::vector<int> list;
  int v;
  while (is >> v) list.push_back(v);
  if (!is.eof() || static_cast<int>(list.size()) != p) r.fail("bad order line");
  return list;
}

struct Header {
  int p = 0, q = 0;
  std::vector<int> order;
};

Header read_header(LineReader& r) {
  std::string line;
  Header h;
  if (!r.next(line)) r.fail("missing header");
  if (!scan(line, h.p, h.q) || h.p < 0 || h.q < 0) r.fail("expected \"p q\"");
  return h;
}

bool identity(const std::vector<int>& list) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] != static_cast<int>(i)) return false;
  return true;
}

void write_header(std::ostream& out, const Graph& g) {
  out << g.order() << " " << g.size() << "\n";
  if (!identity(g.vertex_list())) {
    out << "order";
    for (int v : g.vertex_list()) out << " " << v;
    out << "\n";
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r{in};
  Header h = read_header(r);
  std::vector<Edge> edges;
  std::string line;
  while (r.next(line)) {
    if (starts_with(line, "order")) {
      h.order = parse_order(r, line, h.p);
      continue;
    }
    int u, v;
    if (!scan(line, u, v)) r.fail("expected \"u v\"");
    edges.emplace_back(u, v);
  }
  if (static_cast<int>(edges.size()) != h.q) r.fail("edge count differs from header");
  return Graph(h.p, std::move(edges), std::move(h.order));
}

void write_graph(std::ostream& out, const Graph& g) {
  write_header(out, g);
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

EdgeLabeling read_labeling(std::istream& in) {
  LineReader r{in};
  Header h = read_header(r);
  std::vector<Edge> edges;
  std::vector<Int> labels;
  std::string line;
  while (r.next(line)) {
    if (starts_with(line, "sums") || starts_with(line, "matrix")) break;
    if (starts_with(line, "order")) {
      h.order = parse_order(r, line, h.p);
      continue;
    }
    int u, v;
    Int x;
    if (!scan(line, u, v, x)) r.fail("expected \"u v label\"");
    edges.emplace_back(u, v);
    labels.push_back(x);
  }
  if (static_cast<int>(edges.size()) != h.q) r.fail("edge count differs from header");
  return EdgeLabeling(Graph(h.p, std::move(edges), std::move(h.order)), std::move(labels));
}

void write_labeling(std::ostream& out, const EdgeLabeling& l) {
  const Graph& g = l.graph();
  write_header(out, g);
  for (int e = 0; e < g.size(); ++e)
    out << g.edges()[e].first << " " << g.edges()[e].second << " " << l.label(e) << "\n";
}

void write_certificate(std::ostream& out, const ConstructionCertificate& c, bool emit_matrix) {
  write_labeling(out, c.labeling);
  std::map<Int, int> count;
  for (Int s : c.report.sums) ++count[s];
  out << "sums\n";
  for (auto [color, k] : count) out << "color=" << color << " count=" << k << "\n";
  if (emit_matrix) {
    out << "matrix\n";
    write_matrix(out, to_matrix(c.labeling).entries);
  }
}

void write_report(std::ostream& out, const VerificationReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "bijective=" << flag(r.is_bijective) << "\n";
  out << "color_count=" << r.color_count << "\n";
  out << "colors=";
  for (std::size_t i = 0; i < r.colors.size(); ++i) out << (i ? "," : "") << r.colors[i];
  out << "\n";
  out << "injective=" << flag(r.is_injective) << "\n";
  out << "is_local_antimagic=" << flag(r.is_local_antimagic) << "\n";
  out << "parity_balanced=" << flag(r.parity_balanced) << "\n";
}

void write_bounds(std::ostream& out, const BoundReport& b) {
  out << "chi_g=" << b.chi_g << "\n";
  out << "chi_h=" << b.chi_h << "\n";
  out << "k=" << b.k << "\n";
  out << "lower=" << b.lower << "\n";
  out << "odd_girth=";
  if (b.odd_girth)
    out << *b.odd_girth;
  else
    out << "none";
  out << "\n";
  if (b.upper) out << "upper=" << *b.upper << "\n";
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

}  // namespace lalab
