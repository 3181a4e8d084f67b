#include "iwk/rational_poly.hpp"

#include <ostream>

#include "iwk/error.hpp"

namespace iwk {

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(const LambdaElement& f) {
  coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs_.emplace_back(c);
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(QPoly a, const mpq_class& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.normalize();
  return a;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  const std::size_t dsize = divisor.coeffs_.size();
  if (coeffs_.size() < dsize) return {QPoly{}, *this};
  std::vector<mpq_class> r = coeffs_;
  std::vector<mpq_class> q(coeffs_.size() - dsize + 1);
  const mpq_class inv_lead = 1 / divisor.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    if (r[k + dsize - 1] == 0) continue;
    const mpq_class t = r[k + dsize - 1] * inv_lead;
    q[k] = t;
    for (std::size_t j = 0; j < dsize; ++j) r[k + j] -= t * divisor.coeffs_[j];
  }
  r.resize(dsize - 1);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m;
  QPoly r1 = a.rem(m);
  QPoly s0;
  QPoly s1(std::vector<mpq_class>{mpq_class(1)});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorKind::InvalidInput, "polynomial is not invertible modulo the given modulus");
  return (s0 * (1 / r0.leading())).rem(m);
}

RationalPoly::RationalPoly(LambdaElement numerator, mpz_class denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  normalize();
}

RationalPoly::RationalPoly(const QPoly& q) {
  mpz_class den = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num;
  num.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) {
    mpz_class v = c.get_num() * den;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_den_mpz_t());
    num.push_back(std::move(v));
  }
  numerator_ = LambdaElement(std::move(num));
  denominator_ = den;
  normalize();
}

void RationalPoly::normalize() {
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    numerator_ = -numerator_;
  }
  if (numerator_.is_zero()) {
    denominator_ = 1;
    return;
  }
  mpz_class g = numerator_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), denominator_.get_mpz_t());
  if (g != 1) {
    numerator_ = numerator_.exact_div(g);
    mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
  }
}

QPoly RationalPoly::to_qpoly() const {
  std::vector<mpq_class> c;
  c.reserve(numerator_.coeffs().size());
  for (const auto& x : numerator_.coeffs()) {
    mpq_class q(x, denominator_);
    q.canonicalize();
    c.push_back(std::move(q));
  }
  return QPoly(std::move(c));
}

std::string RationalPoly::to_string() const {
  if (denominator_ == 1) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/" + denominator_.get_str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& f) { return os << f.to_string(); }

}  // namespace iwk
