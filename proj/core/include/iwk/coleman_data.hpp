#pragma once

#include "iwk/lambda_matrix.hpp"

namespace iwk {

/// Coordinates of the signed Coleman maps on a rank-2 basis: entry (i, j) is
/// Col_i^±(u_j). Construction enforces X | every entry of col_plus and
/// nonzero determinants.
class ColemanData {
 public:
  ColemanData(LambdaMatrix col_plus, LambdaMatrix col_minus);

  const LambdaMatrix& col_plus() const noexcept { return plus_; }
  const LambdaMatrix& col_minus() const noexcept { return minus_; }

  /// Data for the basis u = z·B, i.e. both matrices multiplied by B on the right.
  ColemanData transformed(const LambdaMatrix& b) const;

 private:
  LambdaMatrix plus_;
  LambdaMatrix minus_;
};

}  // namespace iwk
