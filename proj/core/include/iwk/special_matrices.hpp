#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "iwk/coleman_data.hpp"
#include "iwk/context.hpp"
#include "iwk/lambda_matrix.hpp"

namespace iwk {

struct SpecialLevel {
  int m = 0;
  int columns_divisible = 0;  // i_m
  bool det_divisible = false;
  bool ok = true;
};

struct SpecialReport {
  int n = 0;
  std::vector<SpecialLevel> per_level;  // m = 0 .. n
  bool verdict = true;
};

/// A is special relative to n when, for every 0 ≤ m ≤ n with Φ_m | det A,
/// some column (a, b) or (c, d) is divisible by Φ_m. Rows are never tested.
SpecialReport is_special(const PrimeContext& ctx, const LambdaMatrix& a, int n);

struct BDFactorization {
  LambdaMatrix b;
  LambdaMatrix d;  // diagonal, squarefree products of Φ_m, m ≤ n − 1
};

/// A = B·D where D's j-th entry is the product of every Φ_m (m ≤ n − 1)
/// dividing column j. Throws NotSpecial.
BDFactorization factor_bd(const PrimeContext& ctx, const LambdaMatrix& a, int n);

/// F_n = ω̃_n^+ · Col⁻ + ω̃_n^− · Col⁺, entrywise.
LambdaMatrix assemble_fn(const PrimeContext& ctx, const ColemanData& cd, int n);

struct ParityLevel {
  int m = 0;
  bool uses_minus = true;  // reference matrix: Col⁻ for m = 0 or odd, Col⁺ for even m ≥ 2
  bool proportional = false;
};

struct ParityReport {
  int n = 0;
  std::vector<ParityLevel> per_level;
  bool passed = true;
};

/// For each 0 ≤ m ≤ n, checks that F_n(ε_m) is a nonzero multiple of the
/// parity-selected Coleman matrix at ε_m, exactly in Z[X]/(Φ_m).
ParityReport parity_congruence_check(const PrimeContext& ctx, const ColemanData& cd, int n);

struct GoodBasis {
  LambdaMatrix b;
  std::vector<int> exceptional_levels;  // m with rank F(ε_m) = 1
  mpz_class denominator;                // multiplier used to clear the CRT output
  std::vector<int> corrected_levels;    // m + 1 levels repaired by B + ω_m·C
};

/// B with det B coprime to ω_{n_max} and F_n·B special for 1 ≤ n ≤ n_max.
GoodBasis good_basis_transform(const PrimeContext& ctx, const ColemanData& cd, int n_max);

/// Postconditions of `good_basis_transform`, checked independently.
bool is_good_basis(const PrimeContext& ctx, const ColemanData& cd, const LambdaMatrix& b, int n_max);

struct RodReport {
  bool holds = false;
  std::int64_t intersection_length = 0;  // ω_n·ambient ∩ ⟨B⟩
  std::int64_t scaled_span_length = 0;   // ω_n·⟨B⟩
  bool stable = false;
};

/// Inside Λ_{test_level}², compares ω_n Λ² ∩ ⟨B⟩ with ω_n⟨B⟩ by length over
/// Z/p^N. Throws NotCoprime unless det B is coprime to ω_n.
RodReport rod_check(const PrimeContext& ctx, const LambdaMatrix& b, int n, int test_level);

}  // namespace iwk
