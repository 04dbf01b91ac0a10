#pragma once

#include <string>
#include <vector>

#include "lalab/labeling.hpp"
#include "lalab/magic.hpp"

namespace lalab {

struct BlockTag {
  std::string block;  // "copy", "fiber", "cycle", "guide", "fixture"
  int index = 0;
};

struct ConstructionCertificate {
  EdgeLabeling labeling;
  std::vector<BlockTag> layout;  // per edge
  std::vector<Int> predicted_sums;
  VerificationReport report;
};

ConstructionCertificate expand_copies(const EdgeLabeling& h, int p);
ConstructionCertificate expand_null_fiber(const EdgeLabeling& g, int n);
ConstructionCertificate compose_lexi(const EdgeLabeling& g, const EdgeLabeling& h);
ConstructionCertificate label_join_cycle_null(int m, int n);

// Unchecked expansions behind expand_copies and expand_null_fiber.
EdgeLabeling copies_labeling(const EdgeLabeling& h, int p);
EdgeLabeling null_fiber_labeling(const EdgeLabeling& g, int n);
EdgeLabeling lexi_labeling(const EdgeLabeling& g, const EdgeLabeling& h);

// Fiber matrix for G[O_n]: a magic square, or ((1,4),(3,2)) when n = 2.
IntMatrix fiber_matrix(int n);

// 2 x 2n guide for the complete bipartite part of C_2m v O_2n.
GuideMatrix join_guide(int n);
// B = (B1; B2) before or after the first-column rotation of B1.
IntMatrix join_block(int m, int n, bool rotate);
// Vertex list u1,u3,...,u2,u4,...,v1..v2n as graph indices.
std::vector<int> join_vertex_list(int m, int n);

struct JoinSums {
  Int odd_cycle;
  Int even_cycle;
  Int null_side;
};
JoinSums join_predicted_sums(int m, int n);

}  // namespace lalab
