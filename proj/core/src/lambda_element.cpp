#include "iwk/lambda_element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "iwk/error.hpp"

namespace iwk {

LambdaElement::LambdaElement(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

LambdaElement::LambdaElement(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

LambdaElement LambdaElement::constant(const mpz_class& c) { return LambdaElement(std::vector<mpz_class>{c}); }

LambdaElement LambdaElement::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return LambdaElement(std::move(v));
}

void LambdaElement::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class LambdaElement::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

bool LambdaElement::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

mpz_class LambdaElement::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class LambdaElement::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return LambdaElement(std::move(out));
}

LambdaElement& LambdaElement::operator*=(const LambdaElement& rhs) { return *this = *this * rhs; }

LambdaElement& LambdaElement::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

LambdaElement LambdaElement::operator-() const {
  LambdaElement r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

LambdaElement LambdaElement::pow(unsigned e) const {
  LambdaElement result = constant(1);
  LambdaElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::pair<LambdaElement, LambdaElement> LambdaElement::divmod(const LambdaElement& monic_divisor) const {
  if (!monic_divisor.is_monic()) throw Error(ErrorKind::InvalidInput, "division requires a monic divisor");
  const std::size_t dsize = monic_divisor.coeffs_.size();
  if (coeffs_.size() < dsize) return {LambdaElement{}, *this};
  std::vector<mpz_class> r = coeffs_;
  std::vector<mpz_class> q(coeffs_.size() - dsize + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class lead = r[k + dsize - 1];
    if (lead == 0) continue;
    q[k] = lead;
    for (std::size_t j = 0; j < dsize; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), lead.get_mpz_t(), monic_divisor.coeffs_[j].get_mpz_t());
    }
  }
  r.resize(dsize - 1);
  return {LambdaElement(std::move(q)), LambdaElement(std::move(r))};
}

LambdaElement LambdaElement::rem(const LambdaElement& monic_divisor) const { return divmod(monic_divisor).second; }

bool LambdaElement::divisible_by(const LambdaElement& monic_divisor) const { return rem(monic_divisor).is_zero(); }

LambdaElement LambdaElement::exact_div(const LambdaElement& monic_divisor) const {
  auto [q, r] = divmod(monic_divisor);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division is not exact");
  return q;
}

LambdaElement LambdaElement::exact_div(const mpz_class& c) const {
  LambdaElement r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw Error(ErrorKind::InvalidInput, "coefficient division is not exact");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::string LambdaElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'X';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LambdaElement& f) { return os << f.to_string(); }

}  // namespace iwk
