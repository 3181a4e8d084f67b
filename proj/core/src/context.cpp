#include "iwk/context.hpp"

#include <limits>
#include <string>

#include "iwk/error.hpp"

namespace iwk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::DuplicateLevel: return "DuplicateLevel";
    case ErrorKind::PrecisionUnstable: return "PrecisionUnstable";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::PhiDivides: return "PhiDivides";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::UndefinedRank: return "UndefinedRank";
    case ErrorKind::NotSpecial: return "NotSpecial";
    case ErrorKind::DegenerateColeman: return "DegenerateColeman";
    case ErrorKind::NotCoprime: return "NotCoprime";
  }
  return "Unknown";
}

bool is_odd_prime(std::int64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeContext::PrimeContext(std::int64_t p, int precision, int margin)
    : p_(p), precision_(precision), margin_(margin) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidInput, "p must be an odd prime");
  if (precision < 1) throw Error(ErrorKind::InvalidInput, "precision N must be at least 1");
  if (margin < 1) throw Error(ErrorKind::InvalidInput, "stability margin must be at least 1");
}

mpz_class PrimeContext::prime_power(int e) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(e));
  return r;
}

std::int64_t PrimeContext::pow(int m) const {
  if (m < 0) throw Error(ErrorKind::InvalidInput, "negative level");
  std::int64_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / p_) {
      throw Error(ErrorKind::InvalidInput, "p^" + std::to_string(m) + " overflows 63 bits");
    }
    r *= p_;
  }
  return r;
}

std::int64_t PrimeContext::totient(int m) const {
  if (m == 0) return 1;
  return pow(m) - pow(m - 1);
}

int PrimeContext::valuation(const mpz_class& x, int cap) const {
  if (x == 0) return cap;
  const unsigned long p = static_cast<unsigned long>(p_);
  if (!mpz_divisible_ui_p(x.get_mpz_t(), p)) return 0;
  mpz_class t = x;
  int v = 0;
  while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace iwk
