#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwk/context.hpp"
#include "iwk/lambda_element.hpp"
#include "iwk/lambda_matrix.hpp"
#include "iwk/rational_poly.hpp"

namespace iwk {

/// Non-negative integer or +∞.
class ExtendedValuation {
 public:
  constexpr ExtendedValuation() = default;
  constexpr explicit ExtendedValuation(std::int64_t v) : value_(v) {}
  static constexpr ExtendedValuation infinity() { return ExtendedValuation(); }

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: finite.
  std::int64_t value() const { return *value_; }

  friend constexpr bool operator==(const ExtendedValuation&, const ExtendedValuation&) = default;
  friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedValuation(*a.value_ + *b.value_);
  }

  /// Decimal value, or "inf".
  std::string to_string() const;

 private:
  std::optional<std::int64_t> value_;
};

/// Element of Z[X]/(Φ_m) ⊂ Q_p(ζ_{p^m}); rep has degree < φ(p^m).
struct CyclotomicPoint {
  int m = 0;
  LambdaElement rep;
};

CyclotomicPoint at_eps(const PrimeContext& ctx, int m, const LambdaElement& f);

/// Resultant Res(Φ_m, f), computed as the determinant of multiplication by f
/// on Z[X]/(Φ_m). For m = 0 this is f(0).
mpz_class cyclotomic_resultant(const PrimeContext& ctx, int m, const LambdaElement& f);

/// ord_{ε_m} f(ε_m), normalised so that ord(ε_m) = 1; ∞ iff Φ_m | f.
ExtendedValuation ord_eps(const PrimeContext& ctx, int m, const LambdaElement& f);

ExtendedValuation det_ord_at_eps(const PrimeContext& ctx, int m, const LambdaMatrix& a);

/// Rank of A(ε_m) over Q(ζ_{p^m}).
int matrix_rank_at_eps(const PrimeContext& ctx, int m, const LambdaMatrix& a);

struct CrtPoint {
  int level = 0;
  RationalPoly value;
};

/// F ∈ Q[X] with F ≡ value_i mod Φ_{level_i} for every point and
/// deg F < Σ φ(p^{level_i}). Throws DuplicateLevel on repeated levels.
RationalPoly crt_interpolate(const PrimeContext& ctx, const std::vector<CrtPoint>& points);

/// Least positive integer d with d·f integral for every f; the multiplier
/// used to clear CRT denominators.
mpz_class common_denominator(const std::vector<RationalPoly>& polys);

}  // namespace iwk
