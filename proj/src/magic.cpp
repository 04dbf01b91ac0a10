#include "lalab/magic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "lalab/error.hpp"

namespace lalab {

IntMatrix make_matrix(const std::vector<std::vector<Int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error(ErrorKind::InvalidParameter, "ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> row_sums(const IntMatrix& m) {
  std::vector<Int> s(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s[i] += m(i, j);
  return s;
}

std::vector<Int> col_sums(const IntMatrix& m) {
  std::vector<Int> s(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s[j] += m(i, j);
  return s;
}

MagicCheck check_magic(const IntMatrix& m) {
  MagicCheck c;
  std::vector<Int> all;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) all.push_back(m(i, j));
  std::sort(all.begin(), all.end());
  c.distinct = std::adjacent_find(all.begin(), all.end()) == all.end();
  c.baseline_range = c.distinct && !all.empty() && all.front() == 1 &&
                     all.back() == static_cast<Int>(all.size());
  auto constant = [](const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [&](Int x) { return x == v.front(); });
  };
  c.rows_constant = constant(row_sums(m));
  c.cols_constant = constant(col_sums(m));
  return c;
}

MagicRectangle make_magic(IntMatrix entries) {
  if (entries.rows() == 0 || entries.cols() == 0)
    throw Error(ErrorKind::InvalidParameter, "empty matrix");
  if (!check_magic(entries).ok()) throw Error(ErrorKind::NoSuchObject, "matrix is not magic");
  MagicRectangle r;
  r.row_sum = row_sums(entries)[0];
  r.col_sum = col_sums(entries)[0];
  r.entries = std::move(entries);
  return r;
}

namespace {

IntMatrix siamese(int n) {
  IntMatrix m(n, n, 0);
  int r = 0, c = n / 2;
  for (Int v = 1; v <= static_cast<Int>(n) * n; ++v) {
    m(r, c) = v;
    int nr = (r + n - 1) % n, nc = (c + 1) % n;
    if (m(nr, nc) != 0) {
      nr = (r + 1) % n;
      nc = c;
    }
    r = nr;
    c = nc;
  }
  return m;
}

IntMatrix doubly_even(int n) {
  IntMatrix m(n, n);
  const Int top = static_cast<Int>(n) * n + 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = static_cast<Int>(i) * n + j + 1;
      int a = i % 4, b = j % 4;
      m(i, j) = (a == b || a + b == 3) ? top - v : v;
    }
  return m;
}

// LUX method for n = 4k+2.
IntMatrix singly_even(int n) {
  const int h = n / 2, k = (n - 2) / 4;
  IntMatrix base = siamese(h);
  enum { L, U, X };
  static constexpr int fill[3][2][2] = {{{4, 1}, {2, 3}}, {{1, 4}, {2, 3}}, {{1, 4}, {3, 2}}};
  IntMatrix m(n, n);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < h; ++c) {
      int kind = r <= k ? L : (r == k + 1 ? U : X);
      if (c == h / 2 && r == k) kind = U;
      if (c == h / 2 && r == k + 1) kind = L;
      Int off = 4 * (base(r, c) - 1);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) m(2 * r + a, 2 * c + b) = fill[kind][a][b] + off;
    }
  return m;
}

// Centered form Y = 2X - (mn+1); entries are odd, rows and columns sum to 0.
using Centered = Matrix<Int>;

// +-(2t+1) in 2x2 blocks [[+y,-z],[-y,+z]]; needs m even, n % 4 == 0.
Centered block_balanced(int m, int n, Int base = 0) {
  Centered y(m, n);
  auto val = [](Int t) { return 2 * t + 1; };
  for (int br = 0; br < m / 2; ++br) {
    Int row_base = base + static_cast<Int>(br) * n;
    for (int q = 0; q < n / 4; ++q) {
      Int t0 = row_base + 4 * q;
      const Int pairs[2][2] = {{t0, t0 + 1}, {t0 + 3, t0 + 2}};
      for (int s = 0; s < 2; ++s) {
        int c = 4 * q + 2 * s;
        Int yv = val(pairs[s][0]), zv = val(pairs[s][1]);
        y(2 * br, c) = yv;
        y(2 * br, c + 1) = -zv;
        y(2 * br + 1, c) = -yv;
        y(2 * br + 1, c + 1) = zv;
      }
    }
  }
  return y;
}

Centered centered(const IntMatrix& x) {
  const Int shift = static_cast<Int>(x.rows()) * x.cols() + 1;
  Centered y(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) y(i, j) = 2 * x(i, j) - shift;
  return y;
}

IntMatrix uncentered(const Centered& y) {
  const Int shift = static_cast<Int>(y.rows()) * y.cols() + 1;
  IntMatrix x(y.rows(), y.cols());
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) x(i, j) = (y(i, j) + shift) / 2;
  return x;
}

// m <= n, both even, (m,n) != (2,2).
IntMatrix even_rectangle(int m, int n) {
  if (n % 4 == 0) return uncentered(block_balanced(m, n));
  if (m % 4 == 0) return uncentered(block_balanced(n, m).transposed());
  // m = n = 2 (mod 4), m < n: a centered m x w block followed by balanced blocks.
  Centered a;
  if (m == 2) {
    a = centered(make_matrix({{2, 4, 5, 6, 12, 10}, {11, 9, 8, 7, 1, 3}}));
  } else {
    a = centered(magic_square(m).entries);
  }
  const int w = a.cols();
  Centered y(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < w; ++j) y(i, j) = a(i, j);
  if (n > w) {
    Centered b = block_balanced(m, n - w);
    const Int lift = static_cast<Int>(m) * w;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n - w; ++j) y(i, w + j) = b(i, j) + (b(i, j) > 0 ? lift : -lift);
  }
  return uncentered(y);
}

// m <= n, both odd, m >= 3. Columns come from a Kotzig array (every row a
// permutation of 0..n-1, constant column sums), so row a holds the block
// [na+1, na+n]. Rows are then balanced by swaps inside columns.
IntMatrix odd_rectangle(int m, int n) {
  const int h = (n - 1) / 2, c = (m - 1) / 2;
  std::vector<std::vector<int>> k(m, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    k[c - 1][j] = j;
    k[c][j] = (j + h) % n;
    k[c + 1][j] = 3 * h - k[c - 1][j] - k[c][j];
  }
  for (int d = 2; d <= c; ++d)
    for (int j = 0; j < n; ++j) {
      k[c - d][j] = (j + d) % n;
      k[c + d][j] = n - 1 - k[c - d][j];
    }
  IntMatrix x(m, n);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < n; ++j) x(a, j) = static_cast<Int>(n) * a + k[a][j] + 1;

  const Int target = static_cast<Int>(n) * (static_cast<Int>(m) * n + 1) / 2;
  std::vector<Int> rs = row_sums(x);
  std::mt19937_64 rng(0x5eedULL + 131ULL * m + n);
  auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<unsigned>(bound)); };
  auto sq = [](Int v) { return v * v; };
  constexpr long kMaxSteps = 5'000'000;
  for (long step = 0; step < kMaxSteps; ++step) {
    auto [lo_it, hi_it] = std::minmax_element(rs.begin(), rs.end());
    if (*lo_it == target && *hi_it == target) return x;
    int hi = static_cast<int>(hi_it - rs.begin()), lo = static_cast<int>(lo_it - rs.begin());
    if (rng() % 10 < 3) {
      hi = pick(m);
      lo = pick(m - 1);
      if (lo >= hi) ++lo;
      if (rs[hi] < rs[lo]) std::swap(hi, lo);
    }
    const Int before = sq(rs[hi] - target) + sq(rs[lo] - target);
    int best = -1;
    Int best_gain = 0;
    for (int j = 0; j < n; ++j) {
      Int d = x(hi, j) - x(lo, j);
      Int after = sq(rs[hi] - d - target) + sq(rs[lo] + d - target);
      if (best < 0 || after - before < best_gain || (after - before == best_gain && rng() % 2)) {
        best = j;
        best_gain = after - before;
      }
    }
    if (best_gain >= 0) best = pick(n);
    Int d = x(hi, best) - x(lo, best);
    std::swap(x(hi, best), x(lo, best));
    rs[hi] -= d;
    rs[lo] += d;
  }
  throw Error(ErrorKind::ConstructionUnsound,
              "row balancing did not converge for " + std::to_string(m) + "x" + std::to_string(n));
}

}  // namespace

MagicRectangle magic_square(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "order must be positive");
  if (n == 2) throw Error(ErrorKind::NoSuchObject, "no magic square of order 2");
  if (n % 2 == 1) return make_magic(siamese(n));
  if (n % 4 == 0) return make_magic(doubly_even(n));
  return make_magic(singly_even(n));
}

MagicRectangle magic_rectangle(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidParameter, "dimensions must be positive");
  if (m == n) return magic_square(n);
  const std::string dims = std::to_string(m) + "x" + std::to_string(n);
  if (m % 2 != n % 2) throw Error(ErrorKind::NoSuchObject, "no magic rectangle " + dims);
  if (m == 1 || n == 1) throw Error(ErrorKind::NoSuchObject, "no magic rectangle " + dims);
  if (m > n) return transpose(magic_rectangle(n, m));
  return make_magic(m % 2 == 0 ? even_rectangle(m, n) : odd_rectangle(m, n));
}

MagicRectangle offset_block(const MagicRectangle& omega, Int i, Int step) {
  if (i < 1) throw Error(ErrorKind::InvalidParameter, "offset index must be >= 1");
  MagicRectangle r = omega;
  const Int add = (i - 1) * step;
  for (int a = 0; a < r.rows(); ++a)
    for (int b = 0; b < r.cols(); ++b) r.entries(a, b) += add;
  r.row_sum += add * r.cols();
  r.col_sum += add * r.rows();
  return r;
}

MagicRectangle transpose(const MagicRectangle& omega) {
  return MagicRectangle{omega.entries.transposed(), omega.col_sum, omega.row_sum};
}

}  // namespace lalab
