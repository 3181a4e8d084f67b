#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "iwk/context.hpp"
#include "iwk/lambda_element.hpp"

namespace iwk {

struct OmegaTower {
  int n = 0;
  LambdaElement omega;              // ω_n = (1+X)^{p^n} − 1
  LambdaElement omega_plus;         // X · ∏ Φ_m, 1 ≤ m ≤ n, m even
  LambdaElement omega_minus;        // X · ∏ Φ_m, 1 ≤ m ≤ n, m odd
  LambdaElement omega_tilde_plus;   // omega_plus / X
  LambdaElement omega_tilde_minus;  // omega_minus / X
};

struct IwasawaInvariants {
  long mu = 0;
  long lambda = 0;

  friend bool operator==(const IwasawaInvariants&, const IwasawaInvariants&) = default;
};

/// Φ_m: X for m = 0, otherwise the p^m-th cyclotomic polynomial in 1+X.
LambdaElement cyclotomic_phi(const PrimeContext& ctx, int m);

/// (1+X)^{p^n} − 1, expanded directly from binomial coefficients.
LambdaElement omega(const PrimeContext& ctx, int n);

OmegaTower omega_tower(const PrimeContext& ctx, int n);

/// Degrees of ω̃_n^± computed from totients alone, without building the
/// polynomials; usable far beyond the sizes `omega_tower` can expand.
struct OmegaTildeDegrees {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
};
OmegaTildeDegrees omega_tilde_degrees(const PrimeContext& ctx, int n);

/// μ = least coefficient valuation, λ = first index attaining it.
IwasawaInvariants iwasawa_invariants(const PrimeContext& ctx, const LambdaElement& f);

/// Representative of f in Λ_n = Λ/(ω_n) as p^n coefficients in [0, p^N).
std::vector<mpz_class> reduce_mod_omega(const PrimeContext& ctx, const LambdaElement& f, int n);

}  // namespace iwk
