#pragma once

// Generator matrices for submodules of Λ_n^k, shared by the ∇ engine and
// the intersection check.

#include <vector>

#include <gmpxx.h>

#include "iwk/context.hpp"
#include "iwk/int_matrix.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_element.hpp"

namespace iwk::detail {

/// Coefficient vectors of X^i·f mod w for i < count, exact over Z, each of
/// length deg w (w monic).
std::vector<std::vector<mpz_class>> shifted_residues(const LambdaElement& f, const LambdaElement& w,
                                                     std::size_t count);

/// Columns X^i R_j mod ω_level (i < count) inside Z^{k p^level}; column index
/// j·count + i.
IntMatrix relation_span(const PrimeContext& ctx, const LambdaPresentation& rel, int level, std::size_t count);

}  // namespace iwk::detail
