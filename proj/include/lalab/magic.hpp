#pragma once

#include "lalab/matrix.hpp"

namespace lalab {

struct MagicRectangle {
  IntMatrix entries;
  Int row_sum = 0;
  Int col_sum = 0;

  int rows() const { return entries.rows(); }
  int cols() const { return entries.cols(); }
};

struct MagicCheck {
  bool distinct = false;
  bool rows_constant = false;
  bool cols_constant = false;
  bool baseline_range = false;  // entries are exactly 1..mn

  bool ok() const { return distinct && rows_constant && cols_constant; }
};

MagicCheck check_magic(const IntMatrix& m);

// Wraps a matrix after checking it; throws NoSuchObject if it is not magic.
MagicRectangle make_magic(IntMatrix entries);

MagicRectangle magic_square(int n);
MagicRectangle magic_rectangle(int m, int n);
MagicRectangle offset_block(const MagicRectangle& omega, Int i, Int step);
MagicRectangle transpose(const MagicRectangle& omega);

}  // namespace lalab
