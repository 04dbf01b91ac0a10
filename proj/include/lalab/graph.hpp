#pragma once

#include <utility>
#include <vector>

namespace lalab {

using Edge = std::pair<int, int>;

// Simple undirected graph on 0..order-1 with a fixed vertex list.
// Edges keep their insertion order and are stored with first < second.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges, std::vector<int> vertex_list = {});

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& vertex_list() const { return vertex_list_; }

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  // Edge indices incident to v, aligned with neighbors(v).
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  // Index of edge uv or -1.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

  // Position of v in the vertex list.
  int position(int v) const { return position_[v]; }

  Graph with_vertex_list(std::vector<int> list) const;
  std::vector<std::vector<char>> adjacency_matrix() const;
  bool is_regular() const;
  int component_count() const;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> vertex_list_;
  std::vector<int> position_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> incident_;
};

enum class Family { cycle, null, complete_bipartite, prism, octahedron, path, complete };

// Canonical orders:
//   cycle(n): edges (i,i+1) then (0,n-1);
//   prism(n): outer cycle 0..n-1, inner cycle n..2n-1, spokes (i,n+i);
//   octahedron: K_{2,2,2} with parts {0,1},{2,3},{4,5};
//   complete_bipartite(a,b): parts 0..a-1 and a..a+b-1.
Graph generate(Family family, int a = 0, int b = 0);

Graph cycle(int n);
Graph null_graph(int n);
Graph complete_bipartite(int a, int b);
Graph prism(int n);
Graph octahedron();
Graph path(int n);
Graph complete(int n);

// H's vertex b is glued onto G's vertex a; other H vertices follow G's.
Graph one_point_union(const Graph& g, const Graph& h, int a, int b);
Graph join(const Graph& g, const Graph& h);
// Copy c of vertex x is c*|V(H)|+x.
Graph disjoint_copies(const Graph& h, int p);
// (u,x) is u*|V(H)|+x. Vertex list runs over G's list, then H's list.
Graph lexicographic(const Graph& g, const Graph& h);

}  // namespace lalab
