#include "lalab/labeling.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lalab/error.hpp"

namespace lalab {

EdgeLabeling::EdgeLabeling(Graph graph, std::vector<Int> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != graph_.size())
    throw Error(ErrorKind::InvalidParameter, "label count differs from edge count");
}

Int EdgeLabeling::label(int u, int v) const {
  int e = graph_.edge_index(u, v);
  if (e < 0) throw Error(ErrorKind::Index, "not an edge");
  return labels_[e];
}

std::vector<Int> induced_sums(const EdgeLabeling& l) {
  const Graph& g = l.graph();
  std::vector<Int> s(g.order(), 0);
  for (int e = 0; e < g.size(); ++e) {
    s[g.edges()[e].first] += l.label(e);
    s[g.edges()[e].second] += l.label(e);
  }
  return s;
}

VerificationReport verify(const EdgeLabeling& l) {
  const Graph& g = l.graph();
  VerificationReport r;
  r.sums = induced_sums(l);

  std::vector<Int> sorted = l.labels();
  std::sort(sorted.begin(), sorted.end());
  r.is_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.is_bijective = r.is_injective &&
                   (sorted.empty() || (sorted.front() == 1 && sorted.back() == g.size()));

  Int label_total = 0, sum_total = 0;
  for (Int x : l.labels()) label_total += x;
  for (Int x : r.sums) sum_total += x;
  if (sum_total != 2 * label_total)
    throw Error(ErrorKind::ConstructionUnsound, "handshake identity failed");

  for (auto [u, v] : g.edges())
    if (r.sums[u] == r.sums[v]) r.conflicts.emplace_back(u, v);
  r.is_local_antimagic = r.is_injective && r.conflicts.empty();

  r.colors = r.sums;
  std::sort(r.colors.begin(), r.colors.end());
  r.colors.erase(std::unique(r.colors.begin(), r.colors.end()), r.colors.end());
  r.color_count = static_cast<int>(r.colors.size());

  for (int v = 0; v < g.order(); ++v) {
    int odd = 0;
    for (int e : g.incident(v)) odd += static_cast<int>(l.label(e) & 1);
    if (2 * odd != g.degree(v)) r.unbalanced.push_back(v);
  }
  r.parity_balanced = r.unbalanced.empty();
  return r;
}

LabelingMatrix to_matrix(const EdgeLabeling& l) { return to_matrix(l, l.graph().vertex_list()); }

LabelingMatrix to_matrix(const EdgeLabeling& l, const std::vector<int>& vertex_list) {
  const Graph& g = l.graph();
  Graph check = g.with_vertex_list(vertex_list);  // validates the permutation
  LabelingMatrix m{vertex_list, IntMatrix(g.order(), g.order(), 0)};
  for (int e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edges()[e];
    int i = check.position(u), j = check.position(v);
    m.entries(i, j) = m.entries(j, i) = l.label(e);
  }
  return m;
}

EdgeLabeling from_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidParameter, "matrix is not square");
  std::vector<Edge> edges;
  std::vector<Int> labels;
  for (int i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) throw Error(ErrorKind::InvalidParameter, "nonzero diagonal");
    for (int j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw Error(ErrorKind::InvalidParameter, "matrix is not symmetric");
      if (m(i, j) != 0) {
        edges.emplace_back(i, j);
        labels.push_back(m(i, j));
      }
    }
  }
  return EdgeLabeling(Graph(m.rows(), std::move(edges)), std::move(labels));
}

GuideMatrix guide_of(const LabelingMatrix& m) {
  GuideMatrix g(m.order(), m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) {
      Int a = m.entries(i, j);
      if (a == 0) continue;
      g(i, j) = GuideEntry{a, (a & 1) ? Direction::ascending : Direction::descending, 0};
    }
  return g;
}

IntMatrix expand_guide(const GuideMatrix& g, Int p, Int i) {
  IntMatrix out(g.rows(), g.cols(), 0);
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (!g(r, c).is_star()) out(r, c) = g(r, c).copy_value(p, i);
  return out;
}

namespace {

void check_equal_sum_degree(const Graph& g, const std::vector<Int>& sums, bool& flag,
                            std::vector<ConditionFailure>& failures) {
  flag = true;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (sums[u] == sums[v] && g.degree(u) != g.degree(v)) {
        flag = false;
        failures.push_back({"equal sums need equal degrees", u, v});
      }
}

void check_transformed(const std::vector<Int>& sums, const std::vector<Int>& t, bool& flag,
                       std::vector<ConditionFailure>& failures) {
  flag = true;
  for (std::size_t u = 0; u < sums.size(); ++u)
    for (std::size_t v = u + 1; v < sums.size(); ++v)
      if (sums[u] != sums[v] && t[u] == t[v]) {
        flag = false;
        failures.push_back({"transformed sums collide", static_cast<int>(u), static_cast<int>(v)});
      }
}

void check_basic(const VerificationReport& r, bool& bijective, bool& local,
                 std::vector<ConditionFailure>& failures) {
  bijective = r.is_bijective;
  local = r.is_local_antimagic;
  if (!r.is_bijective) failures.push_back({"labels are not a bijection onto 1..q", -1, -1});
}

}  // namespace

CopyConditionReport check_copy_conditions(const EdgeLabeling& h, int p) {
  if (p < 1) throw Error(ErrorKind::InvalidParameter, "p must be >= 1");
  const Graph& g = h.graph();
  CopyConditionReport r;
  r.p = p;
  VerificationReport vr = verify(h);
  check_basic(vr, r.bijective, r.local_antimagic, r.failures);
  r.parity = vr.parity_balanced;
  for (int v : vr.unbalanced) r.failures.push_back({"parity balance", v, -1});
  const std::vector<Int>& sums = vr.sums;
  check_equal_sum_degree(g, sums, r.equal_sum_equal_degree, r.failures);
  for (int v = 0; v < g.order(); ++v)
    r.transformed_twice.push_back(2 * p * sums[v] - static_cast<Int>(g.degree(v)) * (p - 1));
  check_transformed(sums, r.transformed_twice, r.transformed_distinct, r.failures);
  return r;
}

ProductConditionReport check_product_conditions(const EdgeLabeling& gl, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
  const Graph& g = gl.graph();
  ProductConditionReport r;
  r.n = n;
  VerificationReport vr = verify(gl);
  check_basic(vr, r.bijective, r.local_antimagic, r.failures);
  const std::vector<Int>& sums = vr.sums;
  check_equal_sum_degree(g, sums, r.equal_sum_equal_degree, r.failures);
  const Int n3 = static_cast<Int>(n) * n * n;
  for (int v = 0; v < g.order(); ++v)
    r.transformed.push_back(sums[v] * n3 - (n3 - n) * g.degree(v) / 2);
  check_transformed(sums, r.transformed, r.transformed_distinct, r.failures);
  return r;
}

std::string describe(const std::vector<ConditionFailure>& failures) {
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << "; ";
    os << failures[i].condition;
    if (failures[i].u >= 0) os << " at " << failures[i].u;
    if (failures[i].v >= 0) os << "," << failures[i].v;
  }
  return os.str();
}

}  // namespace lalab
