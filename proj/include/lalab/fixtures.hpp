#pragma once

#include <vector>

#include "lalab/matrix.hpp"

namespace lalab::fixtures {

// Labeling matrix of two 4-cycles sharing vertex 6.
IntMatrix two_c4_union();
// Labeling matrix of two triangles sharing vertex 4.
IntMatrix two_c3_union();
// 8x6 magic rectangle over 1..48.
IntMatrix rect_8x6();
// Bipartite block for C_8 v O_6 with rows u1,u3,u5,u7,u2,u6,u8,u4.
IntMatrix c8_o6_block();
// Cycle labels of u_i u_{i+1}, i = 1..8, used with c8_o6_block.
std::vector<Int> c8_cycle_labels();
// Bipartite block for C_6 v O_8 with rows u1,u3,u5,u2,u4,u6.
IntMatrix c6_o8_block();

}  // namespace lalab::fixtures
