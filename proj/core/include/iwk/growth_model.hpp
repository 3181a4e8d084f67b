#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwk/context.hpp"

namespace iwk {

/// s_n = Σ_{k=1}^{n} (−1)^{n−k} p^k.
std::int64_t s_sequence(std::int64_t p, int n);

struct InvariantSet {
  std::int64_t p = 3;
  std::int64_t lambda_plus = 0;
  std::int64_t lambda_minus = 0;
  std::int64_t mu_plus = 0;
  std::int64_t mu_minus = 0;
  std::int64_t r_inf = 0;

  void validate() const;
};

struct GrowthRow {
  int n = 0;
  bool odd = false;
  std::int64_t s_prev = 0;
  std::int64_t delta_e = 0;
  std::int64_t e_n = 0;
};

struct GrowthTable {
  int n0 = 0;
  std::int64_t e0 = 0;
  std::vector<GrowthRow> rows;
};

/// Rows n0+1 .. n_last of e_n − e_{n−1} = 2s_{n−1} + λ_∓ + φ(p^n)μ_∓ − r_∞
/// (odd n uses the minus invariants), accumulated from the baseline e_{n0}.
GrowthTable sha_growth(const InvariantSet& inv, int n0, std::int64_t e0, int n_last);

/// 2s_{n−1} + λ + (p^n − p^{n−1})μ with the parity-selected invariants.
std::int64_t nabla_x_formula(const InvariantSet& inv, int n);

struct DegreeIdentities {
  int n = 0;
  std::int64_t deg_tilde_plus = 0;
  std::int64_t deg_tilde_minus = 0;
  std::int64_t s_prev = 0;
  bool odd_ok = true;   // n odd: deg ω̃_n^+ = s_{n−1}
  bool even_ok = true;  // n even: deg ω̃_n^− = s_{n−1} − 1
  bool expanded = false;  // degrees also confirmed on the expanded polynomials
};

DegreeIdentities degree_identities(const PrimeContext& ctx, int n);

std::string growth_csv(const GrowthTable& table);

}  // namespace iwk
