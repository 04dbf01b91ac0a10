#include "lalab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lalab/error.hpp"

namespace lalab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NoSuchObject: return "no-such-object";
    case ErrorKind::ConditionViolation: return "condition-violation";
    case ErrorKind::ConstructionUnsound: return "construction-unsound";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Index: return "index";
  }
  return "unknown";
}

namespace {

void require(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) throw Error(kind, msg);
}

bool is_permutation_of_range(const std::vector<int>& list, int n) {
  if (static_cast<int>(list.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : list) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

Graph::Graph(int order, std::vector<Edge> edges, std::vector<int> vertex_list)
    : order_(order), edges_(std::move(edges)), vertex_list_(std::move(vertex_list)) {
  require(order >= 0, ErrorKind::InvalidParameter, "negative order");
  if (vertex_list_.empty() && order_ > 0) {
    vertex_list_.resize(order_);
    std::iota(vertex_list_.begin(), vertex_list_.end(), 0);
  }
  require(is_permutation_of_range(vertex_list_, order_), ErrorKind::InvalidParameter,
          "vertex list is not a permutation");
  position_.assign(order_, 0);
  for (int i = 0; i < order_; ++i) position_[vertex_list_[i]] = i;

  neighbors_.assign(order_, {});
  incident_.assign(order_, {});
  for (int e = 0; e < size(); ++e) {
    auto& [u, v] = edges_[e];
    require(u >= 0 && u < order_ && v >= 0 && v < order_, ErrorKind::Index,
            "edge endpoint out of range");
    require(u != v, ErrorKind::InvalidParameter, "self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  for (int v = 0; v < order_; ++v) {
    // sort neighbours, keeping incident aligned
    std::vector<int> idx(neighbors_[v].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return neighbors_[v][a] < neighbors_[v][b]; });
    std::vector<int> nb, inc;
    for (int i : idx) {
      nb.push_back(neighbors_[v][i]);
      inc.push_back(incident_[v][i]);
    }
    for (std::size_t i = 1; i < nb.size(); ++i)
      require(nb[i] != nb[i - 1], ErrorKind::InvalidParameter,
              "duplicate edge " + std::to_string(v) + " " + std::to_string(nb[i]));
    neighbors_[v] = std::move(nb);
    incident_[v] = std::move(inc);
  }
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) return -1;
  const auto& nb = neighbors_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return incident_[u][it - nb.begin()];
}

Graph Graph::with_vertex_list(std::vector<int> list) const {
  return Graph(order_, edges_, std::move(list));
}

std::vector<std::vector<char>> Graph::adjacency_matrix() const {
  std::vector<std::vector<char>> a(order_, std::vector<char>(order_, 0));
  for (auto [u, v] : edges_) a[u][v] = a[v][u] = 1;
  return a;
}

bool Graph::is_regular() const {
  for (int v = 1; v < order_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

int Graph::component_count() const {
  std::vector<int> comp(order_, -1);
  int count = 0;
  for (int s = 0; s < order_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors_[v])
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

Graph cycle(int n) {
  require(n >= 3, ErrorKind::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph null_graph(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "null graph needs n >= 1");
  return Graph(n, {});
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, ErrorKind::InvalidParameter, "complete bipartite needs a,b >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph prism(int n) {
  require(n >= 3, ErrorKind::InvalidParameter, "prism needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  for (int i = 0; i < n; ++i)
    e.emplace_back(n + std::min(i, (i + 1) % n), n + std::max(i, (i + 1) % n));
  for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
  return Graph(2 * n, std::move(e));
}

Graph octahedron() {
  std::vector<Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) e.emplace_back(u, v);
  return Graph(6, std::move(e));
}

Graph path(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph generate(Family family, int a, int b) {
  switch (family) {
    case Family::cycle: return cycle(a);
    case Family::null: return null_graph(a);
    case Family::complete_bipartite: return complete_bipartite(a, b);
    case Family::prism: return prism(a);
    case Family::octahedron: return octahedron();
    case Family::path: return path(a);
    case Family::complete: return complete(a);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

Graph one_point_union(const Graph& g, const Graph& h, int a, int b) {
  require(a >= 0 && a < g.order(), ErrorKind::Index, "vertex a out of range");
  require(b >= 0 && b < h.order(), ErrorKind::Index, "vertex b out of range");
  const int base = g.order();
  auto map = [&](int x) { return x == b ? a : (x < b ? base + x : base + x - 1); };
  std::vector<Edge> e = g.edges();
  for (auto [x, y] : h.edges()) {
    int u = map(x), v = map(y);
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::vector<int> list = g.vertex_list();
  for (int x : h.vertex_list())
    if (x != b) list.push_back(map(x));
  return Graph(g.order() + h.order() - 1, std::move(e), std::move(list));
}

Graph join(const Graph& g, const Graph& h) {
  const int base = g.order();
  std::vector<Edge> e = g.edges();
  for (auto [x, y] : h.edges()) e.emplace_back(base + x, base + y);
  for (int u = 0; u < g.order(); ++u)
    for (int x = 0; x < h.order(); ++x) e.emplace_back(u, base + x);
  std::vector<int> list = g.vertex_list();
  for (int x : h.vertex_list()) list.push_back(base + x);
  return Graph(g.order() + h.order(), std::move(e), std::move(list));
}

Graph disjoint_copies(const Graph& h, int p) {
  require(p >= 1, ErrorKind::InvalidParameter, "need at least one copy");
  const int n = h.order();
  std::vector<Edge> e;
  std::vector<int> list;
  for (int c = 0; c < p; ++c) {
    for (auto [x, y] : h.edges()) e.emplace_back(c * n + x, c * n + y);
    for (int x : h.vertex_list()) list.push_back(c * n + x);
  }
  return Graph(p * n, std::move(e), std::move(list));
}

Graph lexicographic(const Graph& g, const Graph& h) {
  const int n = h.order();
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(g.order()) * h.size() +
            static_cast<std::size_t>(g.size()) * n * n);
  for (int u = 0; u < g.order(); ++u)
    for (auto [x, y] : h.edges()) e.emplace_back(u * n + x, u * n + y);
  for (auto [u, v] : g.edges())
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) e.emplace_back(u * n + x, v * n + y);
  std::vector<int> list;
  for (int u : g.vertex_list())
    for (int x : h.vertex_list()) list.push_back(u * n + x);
  return Graph(g.order() * n, std::move(e), std::move(list));
}

}  // namespace lalab
