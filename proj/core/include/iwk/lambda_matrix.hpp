#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "iwk/lambda_element.hpp"

namespace iwk {

/// 2×2 matrix over Λ written [[a, c], [b, d]]: columns are (a, b) and (c, d).
/// The determinant is computed exactly in Z[X] on construction.
class LambdaMatrix {
 public:
  LambdaMatrix();
  LambdaMatrix(LambdaElement a, LambdaElement c, LambdaElement b, LambdaElement d);

  static LambdaMatrix identity();
  static LambdaMatrix diag(LambdaElement d1, LambdaElement d2);
  static LambdaMatrix scalar(const LambdaElement& s) { return diag(s, s); }

  const LambdaElement& at(int row, int col) const { return entries_[row * 2 + col]; }
  const LambdaElement& det() const noexcept { return det_; }

  /// Entries of column j, top to bottom.
  std::array<LambdaElement, 2> column(int j) const { return {at(0, j), at(1, j)}; }

  bool column_divisible_by(int j, const LambdaElement& monic) const;
  bool is_diagonal() const;
  bool is_zero() const;

  LambdaMatrix reduce(const LambdaElement& monic) const;

  friend LambdaMatrix operator*(const LambdaMatrix& x, const LambdaMatrix& y);
  friend LambdaMatrix operator+(const LambdaMatrix& x, const LambdaMatrix& y);
  friend LambdaMatrix operator*(const LambdaElement& s, const LambdaMatrix& x);
  friend bool operator==(const LambdaMatrix& x, const LambdaMatrix& y) { return x.entries_ == y.entries_; }

  std::string to_string() const;

 private:
  std::array<LambdaElement, 4> entries_;  // row-major
  LambdaElement det_;
};

std::ostream& operator<<(std::ostream& os, const LambdaMatrix& m);

}  // namespace iwk
