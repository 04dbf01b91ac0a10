#pragma once

#include "lalab/error.hpp"
#include "lalab/matrix.hpp"

namespace lalab {

enum class Direction { ascending, descending };

// S_p(a) = [p(a-1)+1, pa].
constexpr Int interval_low(Int p, Int a) { return p * (a - 1) + 1; }
constexpr Int interval_high(Int p, Int a) { return p * a; }

// i-th term (1-based) of S_p(a) read in the given direction.
constexpr Int term(Int p, Int a, Direction d, Int i) {
  if (i < 1 || i > p) throw Error(ErrorKind::Index, "term index out of range");
  return d == Direction::ascending ? p * (a - 1) + i : p * a - i + 1;
}

// term(p,a,asc,i) + term(p,b,desc,i), which does not depend on i.
constexpr Int pair_sum(Int p, Int a, Int b) { return p * (a + b - 1) + 1; }

}  // namespace lalab
