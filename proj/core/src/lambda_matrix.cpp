#include "iwk/lambda_matrix.hpp"

#include <ostream>

namespace iwk {

LambdaMatrix::LambdaMatrix() : LambdaMatrix({}, {}, {}, {}) {}

LambdaMatrix::LambdaMatrix(LambdaElement a, LambdaElement c, LambdaElement b, LambdaElement d)
    : entries_{std::move(a), std::move(c), std::move(b), std::move(d)} {
  det_ = entries_[0] * entries_[3] - entries_[1] * entries_[2];
}

LambdaMatrix LambdaMatrix::identity() { return diag(LambdaElement::constant(1), LambdaElement::constant(1)); }

LambdaMatrix LambdaMatrix::diag(LambdaElement d1, LambdaElement d2) {
  return LambdaMatrix(std::move(d1), {}, {}, std::move(d2));
}

bool LambdaMatrix::column_divisible_by(int j, const LambdaElement& monic) const {
  return at(0, j).divisible_by(monic) && at(1, j).divisible_by(monic);
}

bool LambdaMatrix::is_diagonal() const { return at(0, 1).is_zero() && at(1, 0).is_zero(); }

bool LambdaMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

LambdaMatrix LambdaMatrix::reduce(const LambdaElement& monic) const {
  return LambdaMatrix(entries_[0].rem(monic), entries_[1].rem(monic), entries_[2].rem(monic),
                      entries_[3].rem(monic));
}

LambdaMatrix operator*(const LambdaMatrix& x, const LambdaMatrix& y) {
  return LambdaMatrix(x.at(0, 0) * y.at(0, 0) + x.at(0, 1) * y.at(1, 0),
                      x.at(0, 0) * y.at(0, 1) + x.at(0, 1) * y.at(1, 1),
                      x.at(1, 0) * y.at(0, 0) + x.at(1, 1) * y.at(1, 0),
                      x.at(1, 0) * y.at(0, 1) + x.at(1, 1) * y.at(1, 1));
}

LambdaMatrix operator+(const LambdaMatrix& x, const LambdaMatrix& y) {
  return LambdaMatrix(x.at(0, 0) + y.at(0, 0), x.at(0, 1) + y.at(0, 1), x.at(1, 0) + y.at(1, 0),
                      x.at(1, 1) + y.at(1, 1));
}

LambdaMatrix operator*(const LambdaElement& s, const LambdaMatrix& x) {
  return LambdaMatrix(s * x.at(0, 0), s * x.at(0, 1), s * x.at(1, 0), s * x.at(1, 1));
}

std::string LambdaMatrix::to_string() const {
  return "[[" + at(0, 0).to_string() + ", " + at(0, 1).to_string() + "], [" + at(1, 0).to_string() + ", " +
         at(1, 1).to_string() + "]]";
}

std::ostream& operator<<(std::ostream& os, const LambdaMatrix& m) { return os << m.to_string(); }

}  // namespace iwk
