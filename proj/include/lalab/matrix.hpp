#pragma once

#include <cstdint>
#include <vector>

namespace lalab {

using Int = std::int64_t;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;

IntMatrix make_matrix(const std::vector<std::vector<Int>>& rows);
std::vector<Int> row_sums(const IntMatrix& m);
std::vector<Int> col_sums(const IntMatrix& m);

}  // namespace lalab
