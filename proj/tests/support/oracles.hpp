#pragma once

// Slow reference computations used to cross-check the library. None of them
// share code paths with the implementation beyond basic polynomial arithmetic.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "iwk/context.hpp"
#include "iwk/int_matrix.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_element.hpp"

namespace iwk::oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

/// Determinant and rank by Gaussian elimination over Q.
mpq_class q_det(QMatrix m);
std::size_t q_rank(QMatrix m);
QMatrix to_q(const IntMatrix& m);

int vp(const mpz_class& x, long p);

/// (1+X)^{p^m} − 1 by repeated multiplication.
LambdaElement omega_by_products(long p, int m);
/// ω_m / ω_{m−1} by long division (X for m = 0).
LambdaElement phi_by_division(long p, int m);

/// Resultant from the Sylvester matrix.
mpq_class sylvester_resultant(const LambdaElement& f, const LambdaElement& g);
/// v_p(Res(Φ_m, f)) via Sylvester; nullopt for ∞.
std::optional<std::int64_t> ord_eps(long p, int m, const LambdaElement& f);

/// Elementary divisor valuations capped at N, from gcds of k×k minors
/// (feasible for matrices up to about 5×5).
std::vector<int> snf_valuations_by_minors(const IntMatrix& g, long p, int n);

/// Integer column echelon basis of the lattice spanned by the columns.
IntMatrix echelon_basis(const IntMatrix& g);

/// length_{Z_p}(V/U) for lattices U ⊆ V of equal rank given by generators;
/// nullopt if the ranks differ.
std::optional<std::int64_t> lattice_quotient_length(const IntMatrix& v, const IntMatrix& u, long p);

struct NablaOracle {
  std::int64_t ker_length = 0;
  std::int64_t lower_rank = 0;
  std::int64_t nabla = 0;
};

/// ∇ of Λ^k/⟨ω_n, R⟩ → Λ^k/⟨ω_{n−1}, R⟩ via exact lattices over Z; nullopt
/// when the kernel is infinite.
std::optional<NablaOracle> nabla(long p, const LambdaPresentation& rel, int n);

}  // namespace iwk::oracle
