#include "lalab/constructions.hpp"

#include <algorithm>
#include <string>

#include "lalab/error.hpp"
#include "lalab/fixtures.hpp"

namespace lalab {

namespace {

Direction parity_direction(Int a) { return (a & 1) ? Direction::ascending : Direction::descending; }

// Checks a finished certificate and throws with a witness on mismatch.
void seal(ConstructionCertificate& c, bool need_bijective, const std::string& what) {
  c.report = verify(c.labeling);
  const std::string prefix = what + ": ";
  if (!c.report.is_injective)
    throw Error(ErrorKind::ConstructionUnsound, prefix + "labels are not distinct");
  if (need_bijective && !c.report.is_bijective)
    throw Error(ErrorKind::ConstructionUnsound, prefix + "labels are not 1..q");
  if (!c.report.conflicts.empty()) {
    auto [u, v] = c.report.conflicts.front();
    throw Error(ErrorKind::ConstructionUnsound,
                prefix + "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " share sum " + std::to_string(c.report.sums[u]));
  }
  for (int v = 0; v < c.labeling.graph().order(); ++v)
    if (c.predicted_sums[v] != c.report.sums[v])
      throw Error(ErrorKind::ConstructionUnsound,
                  prefix + "vertex " + std::to_string(v) + " has sum " +
                      std::to_string(c.report.sums[v]) + ", predicted " +
                      std::to_string(c.predicted_sums[v]));
}

void require_conditions(bool ok, const std::vector<ConditionFailure>& f, const char* who) {
  if (!ok) throw Error(ErrorKind::ConditionViolation, std::string(who) + ": " + describe(f));
}

// Labels and predicted sums for the fiber part of G[H] (H may be O_n).
struct FiberPlan {
  const EdgeLabeling& g;
  const Graph& h;
  IntMatrix omega;
  std::vector<Int> omega_rows, omega_cols;
  Int n;

  FiberPlan(const EdgeLabeling& gl, const Graph& hg)
      : g(gl), h(hg), omega(fiber_matrix(hg.order())), n(hg.order()) {
    omega_rows = row_sums(omega);
    omega_cols = col_sums(omega);
  }

  // Edge (u,x)-(v,y) for the G-edge e = uv.
  Int label(int e, int x, int y) const {
    auto [u, v] = g.graph().edges()[e];
    int px = h.position(x), py = h.position(y);
    Int base = (g.label(e) - 1) * n * n;
    const Graph& gg = g.graph();
    return base + (gg.position(u) < gg.position(v) ? omega(px, py) : omega(py, px));
  }

  Int sum(int u, int x) const {
    const Graph& gg = g.graph();
    int px = h.position(x);
    Int s = 0;
    for (std::size_t k = 0; k < gg.neighbors(u).size(); ++k) {
      int v = gg.neighbors(u)[k];
      int e = gg.incident(u)[k];
      s += (g.label(e) - 1) * n * n * n;
      s += gg.position(u) < gg.position(v) ? omega_rows[px] : omega_cols[px];
    }
    return s;
  }
};

}  // namespace

IntMatrix fiber_matrix(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "fiber order must be >= 1");
  if (n == 2) return make_matrix({{1, 4}, {3, 2}});
  return magic_square(n).entries;
}

EdgeLabeling copies_labeling(const EdgeLabeling& h, int p) {
  if (p < 1) throw Error(ErrorKind::InvalidParameter, "p must be >= 1");
  const int q = h.graph().size();
  Graph g = disjoint_copies(h.graph(), p);
  std::vector<Int> labels(g.size());
  for (int i = 0; i < p; ++i)
    for (int e = 0; e < q; ++e) {
      Int a = h.label(e);
      labels[i * q + e] = term(p, a, parity_direction(a), i + 1);
    }
  return EdgeLabeling(std::move(g), std::move(labels));
}

ConstructionCertificate expand_copies(const EdgeLabeling& h, int p) {
  CopyConditionReport cond = check_copy_conditions(h, p);
  require_conditions(cond.ok(), cond.failures, "copy conditions");
  const int n = h.graph().order(), q = h.graph().size();

  ConstructionCertificate c;
  c.labeling = copies_labeling(h, p);
  c.layout.resize(c.labeling.graph().size());
  for (int i = 0; i < p; ++i)
    for (int e = 0; e < q; ++e) c.layout[i * q + e] = {"copy", i + 1};
  c.predicted_sums.resize(c.labeling.graph().order());
  for (int i = 0; i < p; ++i)
    for (int x = 0; x < n; ++x) c.predicted_sums[i * n + x] = cond.transformed_twice[x] / 2;
  seal(c, true, "copies");
  return c;
}

EdgeLabeling null_fiber_labeling(const EdgeLabeling& g, int n) {
  const Graph on = null_graph(n);
  FiberPlan plan(g, on);
  const Graph& gg = g.graph();
  Graph big = lexicographic(gg, on);
  std::vector<Int> labels;
  labels.reserve(big.size());
  for (int e = 0; e < gg.size(); ++e)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) labels.push_back(plan.label(e, x, y));
  return EdgeLabeling(std::move(big), std::move(labels));
}

ConstructionCertificate expand_null_fiber(const EdgeLabeling& g, int n) {
  ProductConditionReport cond = check_product_conditions(g, n);
  require_conditions(cond.ok(), cond.failures, "product conditions");
  const Graph on = null_graph(n);
  FiberPlan plan(g, on);
  const Graph& gg = g.graph();

  ConstructionCertificate c;
  c.labeling = null_fiber_labeling(g, n);
  for (int e = 0; e < gg.size(); ++e)
    c.layout.insert(c.layout.end(), static_cast<std::size_t>(n) * n,
                    BlockTag{"fiber", static_cast<int>(g.label(e))});
  c.predicted_sums.resize(c.labeling.graph().order());
  for (int u = 0; u < gg.order(); ++u)
    for (int x = 0; x < n; ++x) c.predicted_sums[u * n + x] = plan.sum(u, x);
  seal(c, true, "null fiber");
  return c;
}

EdgeLabeling lexi_labeling(const EdgeLabeling& g, const EdgeLabeling& h) {
  const Graph& gg = g.graph();
  const Graph& hg = h.graph();
  const int p = gg.order(), n = hg.order(), qh = hg.size();
  FiberPlan plan(g, hg);
  const Int shift = static_cast<Int>(p) * qh;
  Graph big = lexicographic(gg, hg);
  std::vector<Int> labels;
  labels.reserve(big.size());
  for (int u = 0; u < p; ++u) {
    const Int i = gg.position(u) + 1;
    for (int e = 0; e < qh; ++e) {
      Int a = h.label(e);
      labels.push_back(term(p, a, parity_direction(a), i));
    }
  }
  for (int e = 0; e < gg.size(); ++e)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) labels.push_back(plan.label(e, x, y) + shift);
  return EdgeLabeling(std::move(big), std::move(labels));
}

ConstructionCertificate compose_lexi(const EdgeLabeling& g, const EdgeLabeling& h) {
  const Graph& gg = g.graph();
  const Graph& hg = h.graph();
  const int p = gg.order(), n = hg.order(), qh = hg.size();
  CopyConditionReport hc = check_copy_conditions(h, p);
  require_conditions(hc.ok(), hc.failures, "copy conditions");
  ProductConditionReport gc = check_product_conditions(g, n);
  require_conditions(gc.ok(), gc.failures, "product conditions");

  FiberPlan plan(g, hg);
  const Int shift = static_cast<Int>(p) * qh;
  ConstructionCertificate c;
  c.labeling = lexi_labeling(g, h);
  for (int u = 0; u < p; ++u)
    c.layout.insert(c.layout.end(), qh, BlockTag{"copy", gg.position(u) + 1});
  for (int e = 0; e < gg.size(); ++e)
    c.layout.insert(c.layout.end(), static_cast<std::size_t>(n) * n,
                    BlockTag{"fiber", static_cast<int>(g.label(e))});

  // each fiber label of (u,x) is raised by pq(H), deg_G(u) * n times
  c.predicted_sums.resize(c.labeling.graph().order());
  for (int u = 0; u < p; ++u)
    for (int x = 0; x < n; ++x)
      c.predicted_sums[u * n + x] = hc.transformed_twice[x] / 2 + plan.sum(u, x) +
                                    static_cast<Int>(gg.degree(u)) * n * shift;
  seal(c, true, "lexicographic product");
  return c;
}

GuideMatrix join_guide(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
  constexpr auto up = Direction::ascending;
  constexpr auto down = Direction::descending;
  auto plain = [](Int a, Direction d) { return GuideEntry{a, d, -1}; };
  auto boxed = [](Int a, Direction d) { return GuideEntry{a, d, 0}; };
  std::vector<std::pair<GuideEntry, GuideEntry>> cols;
  const Int N = n;
  if (n == 1) {
    cols = {{plain(2, down), boxed(3, down)}, {boxed(2, down), plain(3, down)}};
  } else {
    cols = {{plain(2, down), boxed(2 * N + 1, down)},
            {plain(3, down), boxed(2 * N, down)},
            {boxed(2, up), plain(2 * N + 1, down)},
            {boxed(2 * N - 1, down), plain(4, up)}};
    for (Int i = 1; i <= N - 2; ++i) {
      cols.push_back({boxed(2 * i + 1, up), plain(2 * N - 2 * i + 2, down)});
      cols.push_back({plain(2 * N - 2 * i + 1, down), boxed(2 * i + 2, up)});
    }
  }
  GuideMatrix g(2, 2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    g(0, j) = cols[j].first;
    g(1, j) = cols[j].second;
  }
  return g;
}

IntMatrix join_block(int m, int n, bool rotate) {
  if (m < 2 || n < 1) throw Error(ErrorKind::InvalidParameter, "need m >= 2 and n >= 1");
  GuideMatrix guide = join_guide(n);
  IntMatrix b(2 * m, 2 * n);
  for (int j = 0; j < 2 * n; ++j)
    for (int r = 1; r <= m; ++r) {
      b(r - 1, j) = guide(0, j).join_value(m, r);
      b(m + r - 1, j) = guide(1, j).join_value(m, r);
    }
  if (rotate) {
    Int last = b(m - 1, 0);
    for (int r = m - 1; r > 0; --r) b(r, 0) = b(r - 1, 0);
    b(0, 0) = last;
  }
  return b;
}

std::vector<int> join_vertex_list(int m, int n) {
  std::vector<int> list;
  for (int i = 0; i < 2 * m; i += 2) list.push_back(i);
  for (int i = 1; i < 2 * m; i += 2) list.push_back(i);
  for (int j = 0; j < 2 * n; ++j) list.push_back(2 * m + j);
  return list;
}

JoinSums join_predicted_sums(int m, int n) {
  if (m == 4 && n == 3) return {202, 206, 260};
  const Int M = m, N = n;
  return {4 * M * N * N - 2 * M * N + 6 * M + N + 1,
          4 * M * N * N + 10 * M * N - 2 * M + N + 1,
          (4 * M * N + 4 * M + 1) * M};
}

ConstructionCertificate label_join_cycle_null(int m, int n) {
  if (m < 2) throw Error(ErrorKind::InvalidParameter, "m must be >= 2");
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "n must be >= 1");
  const bool patch = (m == 4 && n == 3);

  std::vector<int> list = join_vertex_list(m, n);
  IntMatrix b;
  std::vector<Int> cycle_labels(2 * m);
  if (patch) {
    list = {0, 2, 4, 6, 1, 5, 7, 3, 8, 9, 10, 11, 12, 13};
    b = fixtures::c8_o6_block();
    cycle_labels = fixtures::c8_cycle_labels();
  } else {
    b = join_block(m, n, true);
    for (int i = 0; i < 2 * m; ++i) cycle_labels[i] = i + 1;
  }

  Graph g = join(cycle(2 * m), null_graph(2 * n)).with_vertex_list(list);
  ConstructionCertificate c;
  std::vector<Int> labels(g.size());
  c.layout.resize(g.size());
  // cycle edge index i-1 joins u_i and u_{i+1}
  for (int i = 0; i < 2 * m; ++i) {
    labels[i] = cycle_labels[i];
    c.layout[i] = {"cycle", i + 1};
  }
  for (int r = 0; r < 2 * m; ++r)
    for (int j = 0; j < 2 * n; ++j) {
      int e = g.edge_index(list[r], 2 * m + j);
      labels[e] = b(r, j);
      c.layout[e] = {patch ? "fixture" : "guide", j + 1};
    }

  JoinSums s = join_predicted_sums(m, n);
  c.predicted_sums.resize(g.order());
  for (int v = 0; v < 2 * m; ++v) c.predicted_sums[v] = v % 2 == 0 ? s.odd_cycle : s.even_cycle;
  for (int j = 0; j < 2 * n; ++j) c.predicted_sums[2 * m + j] = s.null_side;
  c.labeling = EdgeLabeling(std::move(g), std::move(labels));

  const std::string what = "join C" + std::to_string(2 * m) + " v O" + std::to_string(2 * n);
  seal(c, true, what);
  if (!c.report.parity_balanced)
    throw Error(ErrorKind::ConstructionUnsound,
                what + ": parity balance fails at vertex " + std::to_string(c.report.unbalanced[0]));
  if (c.report.color_count != 3)
    throw Error(ErrorKind::ConstructionUnsound, what + ": expected 3 colors");
  return c;
}

}  // namespace lalab
