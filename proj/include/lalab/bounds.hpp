#pragma once

#include <optional>

#include "lalab/graph.hpp"

namespace lalab {

int chromatic_number(const Graph& g, int vertex_limit = 64);
// Length of a shortest odd cycle; empty for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);

struct BoundReport {
  int chi_g = 0;
  int chi_h = 0;
  std::optional<int> odd_girth;
  int k = 0;
  int lower = 0;  // 2 chi(H) + ceil(chi(H)/k)
  std::optional<int> upper;
};

BoundReport lexi_lower_bound(const Graph& g, const Graph& h);

}  // namespace lalab
