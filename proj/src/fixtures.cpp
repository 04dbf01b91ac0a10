#include "lalab/fixtures.hpp"

namespace lalab::fixtures {

IntMatrix two_c4_union() {
  return make_matrix({
      {0, 0, 0, 0, 8, 0, 1},
      {0, 0, 0, 0, 2, 0, 7},
      {0, 0, 0, 0, 0, 6, 3},
      {0, 0, 0, 0, 0, 4, 5},
      {8, 2, 0, 0, 0, 0, 0},
      {0, 0, 6, 4, 0, 0, 0},
      {1, 7, 3, 5, 0, 0, 0},
  });
}

IntMatrix two_c3_union() {
  return make_matrix({
      {0, 0, 6, 0, 1},
      {0, 0, 0, 5, 2},
      {6, 0, 0, 0, 3},
      {0, 5, 0, 0, 4},
      {1, 2, 3, 4, 0},
  });
}

IntMatrix rect_8x6() {
  return make_matrix({
      {1, 44, 9, 36, 29, 28},
      {2, 43, 10, 35, 30, 27},
      {3, 42, 11, 34, 31, 26},
      {4, 41, 12, 33, 32, 25},
      {45, 8, 37, 16, 17, 24},
      {46, 7, 38, 15, 18, 23},
      {47, 6, 39, 14, 19, 22},
      {48, 5, 40, 13, 20, 21},
  });
}

// rect_8x6 + 8 with a few entries exchanged inside columns 5 and 6.
IntMatrix c8_o6_block() {
  return make_matrix({
      {9, 52, 17, 44, 37, 36},
      {10, 51, 18, 43, 38, 31},
      {11, 50, 19, 42, 39, 34},
      {12, 49, 20, 41, 40, 29},
      {53, 16, 45, 24, 27, 32},
      {54, 15, 46, 23, 26, 33},
      {55, 14, 47, 22, 25, 30},
      {56, 13, 48, 21, 28, 35},
  });
}

std::vector<Int> c8_cycle_labels() { return {1, 8, 3, 2, 5, 4, 7, 6}; }

IntMatrix c6_o8_block() {
  return make_matrix({
      {7, 17, 8, 42, 14, 41, 26, 29},
      {11, 15, 10, 40, 16, 39, 28, 27},
      {9, 13, 12, 38, 18, 37, 30, 25},
      {54, 48, 53, 19, 47, 20, 35, 32},
      {52, 46, 51, 21, 45, 22, 33, 34},
      {50, 44, 49, 23, 43, 24, 31, 36},
  });
}

}  // namespace lalab::fixtures
