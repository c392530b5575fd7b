#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace skewopt {

/// Dense row-major matrix of exact 64-bit integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n, std::int64_t scale = 1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  IntMatrix transpose() const;
  IntMatrix operator-() const;

  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void place(int row, int col, const IntMatrix& block);
  IntMatrix slice(int row, int col, int rows, int cols) const;

  bool is_zero() const;
  bool is_scalar_identity(std::int64_t k) const;
  bool is_skew_symmetric() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace skewopt
