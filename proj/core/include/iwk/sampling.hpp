#pragma once

#include <cstdint>
#include <random>

#include "iwk/coleman_data.hpp"
#include "iwk/context.hpp"
#include "iwk/lambda_element.hpp"
#include "iwk/lambda_matrix.hpp"

namespace iwk {

/// Seeded generators for the randomized suites. Same seed, same stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double probability = 0.5);

  /// Degree ≤ max_degree, coefficients in [−bound, bound].
  LambdaElement poly(int max_degree, std::int64_t bound);
  /// Constant term prime to p: a unit of Λ.
  LambdaElement unit(const PrimeContext& ctx, int max_degree);
  /// Monic of the given degree with every lower coefficient divisible by p.
  LambdaElement distinguished(const PrimeContext& ctx, int degree);
  /// Product of a random subset of {Φ_m : 0 ≤ m ≤ n − 1}.
  LambdaElement squarefree_phi_product(const PrimeContext& ctx, int n);

  /// Random B with det B prime to ω_n (rejection sampling).
  LambdaMatrix coprime_matrix(const PrimeContext& ctx, int n, int max_degree);
  /// B with det B(0) prime to p, so that det B is a unit of Λ.
  LambdaMatrix unit_resultant_matrix(const PrimeContext& ctx, int max_degree);
  /// A = B·D special relative to n, with D diagonal squarefree Φ-products.
  LambdaMatrix special_matrix(const PrimeContext& ctx, int n);
  /// p^a · ∏ Φ_{m_i} · unit with Φ_n excluded from the Φ-factors.
  LambdaElement cyclic_relation(const PrimeContext& ctx, int n);
  /// Valid Coleman data, entries of degree ≤ 6, with occasional rank drops
  /// of Col^± at a low ε_m.
  ColemanData coleman(const PrimeContext& ctx);

 private:
  std::mt19937_64 rng_;
};

}  // namespace iwk
