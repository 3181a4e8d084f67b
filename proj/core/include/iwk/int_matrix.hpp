#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace iwk {

/// Dense row-major matrix of arbitrary-size integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Appends a column; its length must equal rows() (or set rows() when empty).
  void append_column(const std::vector<mpz_class>& column);
  /// Columns of `other` appended to the right.
  IntMatrix hstack(const IntMatrix& other) const;

  /// Entries reduced into [0, modulus).
  IntMatrix reduced(const mpz_class& modulus) const;

  /// Rank over Q by fraction-free (Bareiss) elimination.
  std::size_t rank() const;
  /// Exact determinant of a square matrix (Bareiss).
  mpz_class determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace iwk
