#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace iwk {

/// Integer polynomial standing for an element of Λ = Z_p[[X]]. Coefficient i
/// multiplies X^i; trailing zeros are stripped, so zero is the empty vector.
class LambdaElement {
 public:
  LambdaElement() = default;
  explicit LambdaElement(std::vector<mpz_class> coeffs);
  LambdaElement(std::initializer_list<long> coeffs);

  static LambdaElement constant(const mpz_class& c);
  static LambdaElement monomial(const mpz_class& c, std::size_t degree);
  static LambdaElement x() { return monomial(1, 1); }

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of X^i, zero past the degree.
  mpz_class coeff(std::size_t i) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// −1 for the zero element.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const;

  mpz_class evaluate(const mpz_class& x) const;
  /// Non-negative gcd of the coefficients (0 for the zero element).
  mpz_class content() const;

  LambdaElement& operator+=(const LambdaElement& rhs);
  LambdaElement& operator-=(const LambdaElement& rhs);
  LambdaElement& operator*=(const LambdaElement& rhs);
  LambdaElement& operator*=(const mpz_class& c);

  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator*(LambdaElement a, const mpz_class& c) { return a *= c; }
  friend LambdaElement operator*(const mpz_class& c, LambdaElement a) { return a *= c; }
  LambdaElement operator-() const;

  friend bool operator==(const LambdaElement& a, const LambdaElement& b) { return a.coeffs_ == b.coeffs_; }

  LambdaElement pow(unsigned e) const;

  /// Division by a monic divisor; remains inside Z[X].
  std::pair<LambdaElement, LambdaElement> divmod(const LambdaElement& monic_divisor) const;
  LambdaElement rem(const LambdaElement& monic_divisor) const;
  bool divisible_by(const LambdaElement& monic_divisor) const;
  /// Exact quotient by a monic divisor; throws InvalidInput if not exact.
  LambdaElement exact_div(const LambdaElement& monic_divisor) const;
  /// Exact division of every coefficient by an integer.
  LambdaElement exact_div(const mpz_class& c) const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LambdaElement& f);

}  // namespace iwk
