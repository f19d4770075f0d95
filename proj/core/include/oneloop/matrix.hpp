#pragma once

#include <cstddef>
#include <vector>

#include "oneloop/errors.hpp"

namespace oneloop {

// Dense row-major matrix over an arbitrary entry type.
template <class T>
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, const T& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const T& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<T>& entries() const { return entries_; }

  Matrix<T> times(const Matrix<T>& other, const T& zero) const {
    Matrix<T> out(rows_, other.cols_, zero);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k)
        for (size_t j = 0; j < other.cols_; ++j)
          out.at(i, j) += at(i, k) * other.at(k, j);
    return out;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> entries_;
};

}  // namespace oneloop
