#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "iwk/lambda_element.hpp"

namespace iwk {

/// Polynomial over Q. Used for CRT over Q[X] and inverses modulo Φ_m.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  explicit QPoly(const LambdaElement& f);

  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  mpq_class coeff(std::size_t i) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& c);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  QPoly rem(const QPoly& divisor) const { return divmod(divisor).second; }

 private:
  void normalize();
  std::vector<mpq_class> coeffs_;
};

/// Inverse of a modulo m in Q[X]/(m); throws InvalidInput when gcd(a, m) ≠ 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

/// numerator / denominator with denominator > 0 and
/// gcd(content(numerator), denominator) = 1.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(LambdaElement numerator, mpz_class denominator = 1);
  explicit RationalPoly(const QPoly& q);

  const LambdaElement& numerator() const noexcept { return numerator_; }
  const mpz_class& denominator() const noexcept { return denominator_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_integral() const { return denominator_ == 1; }

  QPoly to_qpoly() const;
  std::string to_string() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void normalize();

  LambdaElement numerator_;
  mpz_class denominator_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RationalPoly& f);

}  // namespace iwk
