#pragma once

// Brute-force reference computations used to cross-check the library.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "lalab/graph.hpp"
#include "lalab/matrix.hpp"

namespace oracle {

using lalab::Edge;
using lalab::Int;

struct ScanResult {
  std::vector<Int> sums;
  bool local_antimagic;
  int colors;
};

// Sums via a double loop over an adjacency/label matrix built from the edge list.
inline ScanResult adjacency_scan(int order, const std::vector<Edge>& edges,
                                 const std::vector<Int>& labels) {
  std::vector<std::vector<Int>> lab(order, std::vector<Int>(order, 0));
  std::vector<std::vector<bool>> adj(order, std::vector<bool>(order, false));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    lab[u][v] = lab[v][u] = labels[e];
    adj[u][v] = adj[v][u] = true;
  }
  ScanResult r;
  r.sums.assign(order, 0);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (adj[i][j]) r.sums[i] += lab[i][j];
  std::set<Int> distinct_labels(labels.begin(), labels.end());
  r.local_antimagic = distinct_labels.size() == labels.size();
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (adj[i][j] && r.sums[i] == r.sums[j]) r.local_antimagic = false;
  r.colors = static_cast<int>(std::set<Int>(r.sums.begin(), r.sums.end()).size());
  return r;
}

inline ScanResult adjacency_scan(const lalab::Graph& g, const std::vector<Int>& labels) {
  return adjacency_scan(g.order(), g.edges(), labels);
}

// Random simple graph on n vertices with edge probability num/den.
inline lalab::Graph random_graph(std::mt19937_64& rng, int n, int num, int den) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % den) < num) edges.emplace_back(u, v);
  return lalab::Graph(n, edges);
}

inline std::vector<Int> random_bijection(std::mt19937_64& rng, int q) {
  std::vector<Int> l(q);
  for (int i = 0; i < q; ++i) l[i] = i + 1;
  std::shuffle(l.begin(), l.end(), rng);
  return l;
}

// Shortest odd cycle by enumerating simple cycles (small graphs only).
inline int shortest_odd_cycle(const lalab::Graph& g) {
  const int n = g.order();
  auto adj = g.adjacency_matrix();
  int best = 0;
  std::vector<char> on(n, 0);
  std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
    for (int w = 0; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (w == start && len >= 3 && len % 2 == 1) {
        if (!best || len < best) best = len;
      }
      if (w > start && !on[w]) {
        on[w] = 1;
        walk(start, w, len + 1);
        on[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = 1;
    walk(s, s, 1);
    on[s] = 0;
  }
  return best;  // 0 when bipartite
}

// Chromatic number by trying every colouring with k colours.
inline int chromatic_brute(const lalab::Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : g.edges())
        if (c[u] == c[v]) ok = false;
      if (ok) return k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Minimum colour count over all q! labelings (tiny graphs only).
inline int chi_la_brute(const lalab::Graph& g) {
  std::vector<Int> l(g.size());
  for (int i = 0; i < g.size(); ++i) l[i] = i + 1;
  int best = 1 << 30;
  do {
    auto r = adjacency_scan(g, l);
    if (r.local_antimagic) best = std::min(best, r.colors);
  } while (std::next_permutation(l.begin(), l.end()));
  return best;
}

// Does any arrangement of 1..mn form an m x n magic rectangle?
// Picks column sets with the right sum, then permutes within columns.
inline bool magic_rectangle_exists(int m, int n) {
  const Int N = static_cast<Int>(m) * n;
  const Int col = m * (N + 1) / 2, row = n * (N + 1) / 2;
  if (m * (N + 1) % 2 || n * (N + 1) % 2) return false;
  std::vector<char> used(N + 1, 0);
  std::vector<std::vector<Int>> cols;
  std::function<bool()> arrange = [&]() {
    // every column permutation combination; fine for small sizes
    std::vector<std::vector<Int>> c = cols;
    for (auto& x : c) std::sort(x.begin(), x.end());
    std::function<bool(int)> go = [&](int j) -> bool {
      if (j == n) {
        for (int i = 0; i < m; ++i) {
          Int s = 0;
          for (int k = 0; k < n; ++k) s += c[k][i];
          if (s != row) return false;
        }
        return true;
      }
      do {
        if (go(j + 1)) return true;
      } while (std::next_permutation(c[j].begin(), c[j].end()));
      return false;
    };
    return go(1);  // column 0 fixed: rows may be reordered freely
  };
  std::function<bool(Int)> pick = [&](Int smallest) -> bool {
    if (static_cast<int>(cols.size()) == n) return arrange();
    while (smallest <= N && used[smallest]) ++smallest;
    std::vector<Int> cur{smallest};
    used[smallest] = 1;
    std::function<bool(Int, Int)> extend = [&](Int from, Int sum) -> bool {
      if (static_cast<int>(cur.size()) == m) {
        if (sum != col) return false;
        cols.push_back(cur);
        bool ok = pick(smallest + 1);
        cols.pop_back();
        return ok;
      }
      for (Int x = from; x <= N && sum + x <= col; ++x) {
        if (used[x]) continue;
        used[x] = 1;
        cur.push_back(x);
        bool ok = extend(x + 1, sum + x);
        cur.pop_back();
        used[x] = 0;
        if (ok) return true;
      }
      return false;
    };
    bool ok = extend(smallest + 1, smallest);
    used[smallest] = 0;
    return ok;
  };
  return pick(1);
}

}  // namespace oracle
