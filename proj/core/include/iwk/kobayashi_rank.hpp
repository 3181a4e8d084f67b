#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "iwk/coleman_data.hpp"
#include "iwk/context.hpp"
#include "iwk/lambda_element.hpp"
#include "iwk/lambda_matrix.hpp"

namespace iwk {

/// One step π_n : M_n → M_{n−1} of a projective system.
struct NablaResult {
  int n = 0;
  std::int64_t ker_length = 0;
  std::int64_t coker_length = 0;
  std::int64_t lower_rank = 0;  // dim_{Q_p} M_{n−1} ⊗ Q_p
  std::int64_t nabla = 0;       // ker − coker + lower_rank
  std::optional<std::int64_t> closed_form;
  std::optional<bool> agrees;

  void attach_closed_form(std::int64_t value, bool report_agreement = true);
};

/// Λ^ambient modulo the Λ-span of `columns` (each column has `ambient` entries).
struct LambdaPresentation {
  std::size_t ambient = 0;
  std::vector<std::vector<LambdaElement>> columns;

  static LambdaPresentation cyclic(const LambdaElement& f);
  static LambdaPresentation from_matrix(const LambdaMatrix& a);
  LambdaPresentation direct_sum(const LambdaPresentation& other) const;

  bool is_square() const { return columns.size() == ambient; }
  /// Determinant of a square relation matrix, exact in Z[X].
  LambdaElement determinant() const;
  /// Rank of the relation matrix over Frac(Λ).
  std::size_t generic_rank() const;
};

/// Brute-force ∇ of Λ^k/⟨ω_n, R⟩ → Λ^k/⟨ω_{n−1}, R⟩ with R fixed across both
/// levels. The kernel is read as a nested span quotient inside Λ_n^k over
/// Z/p^N and certified at N + Δ; the lower rank comes from exact integer
/// elimination. Throws PrecisionUnstable or UndefinedRank (infinite kernel).
NablaResult nabla_brute_force(const PrimeContext& ctx, const LambdaPresentation& relations, int n);

/// Λ/(f, ω_n) → Λ/(f, ω_{n−1}); closed form ord_{ε_n} f(ε_n).
NablaResult nabla_cyclic(const PrimeContext& ctx, const LambdaElement& f, int n);

/// M/ω_n M → M/ω_{n−1} M for the torsion module M = Λ^k / relations.
/// Square relation matrices get the closed form λ + φ(p^n)μ of their
/// determinant. Agreement is reported for cyclic presentations from
/// `cyclic_stabilization_level` on; other presentations go through the sweep.
NablaResult nabla_torsion_tower(const PrimeContext& ctx, const LambdaPresentation& relations, int n);

struct TorsionSweep {
  std::vector<NablaResult> levels;       // n = 1 .. n_max
  std::optional<int> stabilization_level;  // least n agreeing from there on, over ≥ 2 levels
};

TorsionSweep torsion_tower_sweep(const PrimeContext& ctx, const LambdaPresentation& relations, int n_max);

/// A priori level from which a cyclic Λ/(f) tower obeys λ + φ(p^n)μ:
/// the least n ≥ 1 with φ(p^n) > λ(f).
int cyclic_stabilization_level(const PrimeContext& ctx, const LambdaElement& f);

/// A_(n) → A_(n−1); closed form ord_{ε_n} det A(ε_n) when A is special
/// relative to n and Φ_n ∤ det A.
NablaResult nabla_matrix_tower(const PrimeContext& ctx, const LambdaMatrix& a, int n);

/// Λ_n²/⟨F_n⟩_n → Λ_{n−1}²/⟨F_n⟩_{n−1} with the level-n matrix F_n at both
/// levels. Closed form 2·deg ω̃_n^+ + ord det Col⁻ (n odd) or
/// 2·deg ω̃_n^− + ord det Col⁺ (n even), attached when F_n is special
/// relative to n.
NablaResult nabla_coleman_tower(const PrimeContext& ctx, const ColemanData& cd, int n);

/// Parity-dispatched closed form of `nabla_coleman_tower`, without brute force.
std::optional<std::int64_t> coleman_closed_form(const PrimeContext& ctx, const ColemanData& cd, int n);

struct CyclicTower { LambdaElement f; };
struct TorsionTower { LambdaPresentation relations; };
struct MatrixTower { LambdaMatrix a; };
using TowerSpec = std::variant<CyclicTower, TorsionTower, MatrixTower>;

LambdaPresentation presentation_of(const TowerSpec& tower);
/// Validates the tower's invariant (f ≠ 0, torsion quotient, det A ≠ 0).
void validate_tower(const TowerSpec& tower);

struct AdditivityReport {
  NablaResult left;
  NablaResult right;
  NablaResult sum;
  bool holds = false;
};

AdditivityReport additivity_check(const PrimeContext& ctx, const TowerSpec& left, const TowerSpec& right, int n);

}  // namespace iwk
