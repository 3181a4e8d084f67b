#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace iwk {

inline constexpr int kDefaultPrecision = 40;
inline constexpr int kDefaultMargin = 8;

bool is_odd_prime(std::int64_t p) noexcept;

/// Odd prime p together with the precision pair (N, Δ). Coefficients of
/// finite quotients live in Z/p^N; every length is re-read at N + Δ.
class PrimeContext {
 public:
  explicit PrimeContext(std::int64_t p, int precision = kDefaultPrecision,
                        int margin = kDefaultMargin);

  std::int64_t p() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  int margin() const noexcept { return margin_; }

  /// Same prime, precision raised by the margin.
  PrimeContext refined() const { return PrimeContext(p_, precision_ + margin_, margin_); }
  PrimeContext with_precision(int precision) const { return PrimeContext(p_, precision, margin_); }

  mpz_class modulus() const { return prime_power(precision_); }
  mpz_class prime_power(int e) const;

  /// p^m; throws InvalidInput if it does not fit in 63 bits.
  std::int64_t pow(int m) const;
  /// φ(p^m) = p^m − p^(m−1) for m ≥ 1, and 1 for m = 0.
  std::int64_t totient(int m) const;

  /// v_p(x), with v_p(0) reported as `cap`.
  int valuation(const mpz_class& x, int cap) const;

 private:
  std::int64_t p_;
  int precision_;
  int margin_;
};

}  // namespace iwk
