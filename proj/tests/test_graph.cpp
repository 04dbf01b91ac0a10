#include <doctest.h>

#include <algorithm>
#include <set>

#include "lalab/error.hpp"
#include "lalab/fixtures.hpp"
#include "lalab/graph.hpp"
#include "lalab/labeling.hpp"
#include "oracles.hpp"

using namespace lalab;

namespace {

std::vector<Graph> small_generators() {
  return {null_graph(1), null_graph(3), path(2),  path(4),         cycle(3),
          cycle(4),      cycle(5),      prism(3), complete(4),     complete_bipartite(2, 3),
          octahedron()};
}

std::set<Edge> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

bool all_degrees(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

int triangles(const Graph& g) {
  int t = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      for (int c = b + 1; c < g.order(); ++c)
        t += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
  return t;
}

}  // namespace

TEST_CASE("generators") {
  Graph c4 = generate(Family::cycle, 4);
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  CHECK(all_degrees(c4, 2));

  Graph oct = generate(Family::octahedron);
  CHECK(oct.order() == 6);
  CHECK(oct.size() == 12);
  CHECK(all_degrees(oct, 4));

  Graph pr = generate(Family::prism, 3);
  CHECK(pr.order() == 6);
  CHECK(pr.size() == 9);
  CHECK(all_degrees(pr, 3));
  CHECK(triangles(pr) == 2);

  CHECK(generate(Family::complete_bipartite, 2, 3).size() == 6);
  CHECK(generate(Family::null, 3).size() == 0);
}

TEST_CASE("generator parameters below minimum") {
  CHECK_THROWS_AS(cycle(2), Error);
  CHECK_THROWS_AS(null_graph(0), Error);
  CHECK_THROWS_AS(prism(2), Error);
  CHECK_THROWS_AS(complete_bipartite(0, 2), Error);
  try {
    cycle(1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS(Graph(3, {{0, 0}}));
  CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Graph(3, {{0, 3}}));
  CHECK_THROWS(Graph(3, {{0, 1}}, {0, 1, 1}));
  Graph g(3, {{2, 0}});
  CHECK(g.edges()[0] == Edge{0, 2});
  CHECK(g.edge_index(2, 0) == 0);
  CHECK(g.edge_index(1, 0) == -1);
}

TEST_CASE("one point union") {
  Graph g = one_point_union(cycle(4), cycle(4), 0, 0);
  CHECK(g.order() == 7);
  CHECK(g.size() == 8);
  CHECK(g.degree(0) == 4);
  // same degree multiset as the two-4-cycle fixture
  Graph fixture = from_matrix(fixtures::two_c4_union()).graph();
  std::vector<int> a, b;
  for (int v = 0; v < 7; ++v) a.push_back(g.degree(v)), b.push_back(fixture.degree(v));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);

  Graph h = one_point_union(cycle(3), cycle(3), 2, 1);
  CHECK(h.order() == 5);
  CHECK(h.size() == 6);

  Graph p3 = one_point_union(path(2), path(2), 1, 0);
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.component_count() == 1);
  CHECK(p3.degree(1) == 2);

  CHECK_THROWS_AS(one_point_union(cycle(3), cycle(3), 3, 0), Error);
}

TEST_CASE("join") {
  Graph j = join(cycle(4), null_graph(2));
  CHECK(j.order() == 6);
  CHECK(j.size() == 12);
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 4; ++n) {
      Graph g = join(cycle(2 * m), null_graph(2 * n));
      CHECK(g.size() == 2 * m + 4 * m * n);
    }
  CHECK(join(cycle(8), null_graph(6)).size() == 56);
  Graph k2 = join(null_graph(1), null_graph(1));
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);

  for (const Graph& a : small_generators())
    for (const Graph& b : small_generators()) {
      Graph g = join(a, b);
      for (int v = 0; v < a.order(); ++v) CHECK(g.degree(v) == a.degree(v) + b.order());
    }
}

TEST_CASE("disjoint copies") {
  Graph h = from_matrix(fixtures::two_c3_union()).graph();
  Graph seven = disjoint_copies(h, 7);
  CHECK(seven.order() == 35);
  CHECK(seven.size() == 42);
  CHECK(edge_set(disjoint_copies(h, 1)) == edge_set(h));
  Graph matching = disjoint_copies(path(2), 3);
  CHECK(matching.order() == 6);
  CHECK(all_degrees(matching, 1));
  CHECK_THROWS_AS(disjoint_copies(h, 0), Error);
  for (const Graph& g : small_generators())
    for (int p = 1; p <= 3; ++p)
      CHECK(disjoint_copies(g, p).component_count() == p * g.component_count());
}

TEST_CASE("lexicographic product") {
  Graph g = from_matrix(fixtures::two_c4_union()).graph();
  Graph h = from_matrix(fixtures::two_c3_union()).graph();
  Graph gh = lexicographic(g, h);
  CHECK(gh.order() == 35);
  CHECK(gh.size() == 242);

  Graph c5 = cycle(5);
  CHECK(edge_set(lexicographic(c5, null_graph(1))) == edge_set(c5));

  for (int n = 1; n <= 6; ++n)
    CHECK(edge_set(lexicographic(path(2), null_graph(n))) == edge_set(complete_bipartite(n, n)));
}

TEST_CASE("lexicographic size law and Kronecker adjacency") {
  for (const Graph& g : small_generators())
    for (const Graph& h : small_generators()) {
      if (g.order() > 8 || h.order() > 8) continue;
      Graph gh = lexicographic(g, h);
      const int p = g.order(), n = h.order();
      CHECK(gh.size() == p * h.size() + g.size() * n * n);
      auto ag = g.adjacency_matrix();
      auto ah = h.adjacency_matrix();
      auto a = gh.adjacency_matrix();
      bool equal = true;
      for (int u = 0; u < p; ++u)
        for (int x = 0; x < n; ++x)
          for (int v = 0; v < p; ++v)
            for (int y = 0; y < n; ++y) {
              int expect = ag[u][v] * 1 + (u == v ? ah[x][y] : 0);
              equal = equal && a[u * n + x][v * n + y] == expect;
            }
      CHECK(equal);
    }
}

TEST_CASE("vertex list") {
  Graph g = cycle(4).with_vertex_list({0, 2, 1, 3});
  CHECK(g.position(2) == 1);
  Graph lex = lexicographic(g, path(2).with_vertex_list({1, 0}));
  CHECK(lex.vertex_list() == std::vector<int>{1, 0, 5, 4, 3, 2, 7, 6});
}
