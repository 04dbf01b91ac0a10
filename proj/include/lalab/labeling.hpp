#pragma once

#include <string>
#include <vector>

#include "lalab/graph.hpp"
#include "lalab/int_sequences.hpp"
#include "lalab/matrix.hpp"

namespace lalab {

// Labels indexed by edge index of the graph.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  EdgeLabeling(Graph graph, std::vector<Int> labels);

  const Graph& graph() const { return graph_; }
  const std::vector<Int>& labels() const { return labels_; }
  Int label(int edge) const { return labels_[edge]; }
  // Label of uv; throws Index if uv is not an edge.
  Int label(int u, int v) const;

 private:
  Graph graph_;
  std::vector<Int> labels_;
};

std::vector<Int> induced_sums(const EdgeLabeling& l);

struct VerificationReport {
  bool is_injective = false;
  bool is_bijective = false;  // onto 1..q
  bool is_local_antimagic = false;
  int color_count = 0;
  std::vector<Int> colors;
  bool parity_balanced = false;
  std::vector<Edge> conflicts;     // adjacent vertices with equal sums
  std::vector<int> unbalanced;     // vertices failing parity balance
  std::vector<Int> sums;
};

VerificationReport verify(const EdgeLabeling& l);

// Entry 0 is a non-edge.
struct LabelingMatrix {
  std::vector<int> vertex_list;
  IntMatrix entries;

  int order() const { return entries.rows(); }
  bool is_star(int i, int j) const { return entries(i, j) == 0; }
};

LabelingMatrix to_matrix(const EdgeLabeling& l);
LabelingMatrix to_matrix(const EdgeLabeling& l, const std::vector<int>& vertex_list);

// Graph on 0..k-1 read off a symmetric matrix; row i is vertex i.
EdgeLabeling from_matrix(const IntMatrix& m);

struct GuideEntry {
  Int magnitude = 0;  // 0 is a non-edge
  Direction direction = Direction::ascending;
  int offset = 0;  // 0 or -1

  bool is_star() const { return magnitude == 0; }
  // Copy-block value: i-th term of S_p(magnitude).
  Int copy_value(Int p, Int i) const { return term(p, magnitude, direction, i) + offset; }
  // Join value: 2 * term + offset.
  Int join_value(Int m, Int r) const { return 2 * term(m, magnitude, direction, r) + offset; }
};

using GuideMatrix = Matrix<GuideEntry>;

// Odd labels ascend, even labels descend.
GuideMatrix guide_of(const LabelingMatrix& m);
IntMatrix expand_guide(const GuideMatrix& g, Int p, Int i);

struct ConditionFailure {
  std::string condition;
  int u = -1;
  int v = -1;
};

// Requirements on a labeling h of H that is spread over p copies.
// local_antimagic is informative; the constructions verify their output.
struct CopyConditionReport {
  int p = 1;
  bool bijective = false;
  bool local_antimagic = false;
  bool parity = false;                   // equal odd/even incident labels
  bool equal_sum_equal_degree = false;
  bool transformed_distinct = false;
  std::vector<Int> transformed_twice;    // 2p h+(v) - deg(v)(p-1)
  std::vector<ConditionFailure> failures;

  bool ok() const { return bijective && parity && equal_sum_equal_degree && transformed_distinct; }
};

// Requirements on a labeling g of G that is blown up by O_n.
struct ProductConditionReport {
  int n = 1;
  bool bijective = false;
  bool local_antimagic = false;
  bool equal_sum_equal_degree = false;
  bool transformed_distinct = false;
  std::vector<Int> transformed;          // g+(u) n^3 - (n^3-n) deg(u)/2
  std::vector<ConditionFailure> failures;

  bool ok() const { return bijective && equal_sum_equal_degree && transformed_distinct; }
};

CopyConditionReport check_copy_conditions(const EdgeLabeling& h, int p);
ProductConditionReport check_product_conditions(const EdgeLabeling& g, int n);

std::string describe(const std::vector<ConditionFailure>& failures);

}  // namespace lalab
