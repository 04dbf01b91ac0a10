#include "lalab/bounds.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "lalab/error.hpp"

namespace lalab {

namespace {

struct Dsatur {
  const Graph& g;
  std::vector<int> color;
  std::vector<std::vector<int>> seen;  // seen[v][c]: neighbours of v with colour c
  int best;

  Dsatur(const Graph& graph, int upper)
      : g(graph), color(graph.order(), -1),
        seen(graph.order(), std::vector<int>(graph.order() + 1, 0)), best(upper) {}

  int saturation(int v) const {
    int s = 0;
    for (int c = 0; c < best; ++c) s += seen[v][c] > 0;
    return s;
  }

  int pick() const {
    int best_v = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      int s = saturation(v);
      if (s > best_sat || (s == best_sat && g.degree(v) > best_deg)) {
        best_v = v;
        best_sat = s;
        best_deg = g.degree(v);
      }
    }
    return best_v;
  }

  void set(int v, int c, int delta) {
    for (int w : g.neighbors(v)) seen[w][c] += delta;
  }

  void run(int colored, int used) {
    if (used >= best) return;
    if (colored == g.order()) {
      best = used;
      return;
    }
    int v = pick();
    for (int c = 0; c <= used && c < best - 1; ++c) {
      if (seen[v][c]) continue;
      color[v] = c;
      set(v, c, +1);
      run(colored + 1, std::max(used, c + 1));
      set(v, c, -1);
      color[v] = -1;
      if (used >= best) return;
    }
  }
};

int greedy_dsatur(const Graph& g) {
  Dsatur d(g, g.order() + 1);
  int used = 0;
  for (int k = 0; k < g.order(); ++k) {
    int v = d.pick();
    int c = 0;
    while (d.seen[v][c]) ++c;
    d.color[v] = c;
    d.set(v, c, +1);
    used = std::max(used, c + 1);
  }
  return used;
}

int greedy_clique(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> clique{s};
    std::vector<int> cand = g.neighbors(s);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int v : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](int w) { return g.adjacent(v, w); }))
        clique.push_back(v);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace

int chromatic_number(const Graph& g, int vertex_limit) {
  if (g.order() > vertex_limit)
    throw Error(ErrorKind::SizeLimit,
                "chromatic number limited to " + std::to_string(vertex_limit) + " vertices");
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  const int lower = greedy_clique(g);
  const int upper = greedy_dsatur(g);
  if (lower == upper) return upper;
  Dsatur d(g, upper);
  d.run(0, 0);
  return d.best;
}

std::optional<int> odd_girth(const Graph& g) {
  std::optional<int> best;
  std::vector<int> dist(g.order());
  for (int s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    for (auto [u, v] : g.edges())
      if (dist[u] >= 0 && dist[u] == dist[v]) {
        int len = 2 * dist[u] + 1;
        if (!best || len < *best) best = len;
      }
  }
  return best;
}

BoundReport lexi_lower_bound(const Graph& g, const Graph& h) {
  BoundReport r;
  r.odd_girth = odd_girth(g);
  if (!r.odd_girth) throw Error(ErrorKind::NotApplicable, "G is bipartite");
  r.chi_g = chromatic_number(g);
  r.chi_h = chromatic_number(h);
  r.k = (*r.odd_girth - 1) / 2;
  r.lower = 2 * r.chi_h + (r.chi_h + r.k - 1) / r.k;
  return r;
}

}  // namespace lalab
