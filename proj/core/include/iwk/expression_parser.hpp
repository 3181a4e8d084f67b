#pragma once

#include <string_view>

#include "iwk/context.hpp"
#include "iwk/lambda_element.hpp"
#include "iwk/lambda_matrix.hpp"

namespace iwk {

/// Polynomial text: integers, X (or x), Phi_m / Phi(m), omega_n / omega(n),
/// combined with + − * ^ and parentheses; juxtaposition multiplies (3X^2).
/// Throws InvalidInput with the offending position.
LambdaElement parse_polynomial(const PrimeContext& ctx, std::string_view text);

/// `diag(d1, d2)`, `I`, or bracket rows `[[a, c], [b, d]]` of polynomial text.
LambdaMatrix parse_matrix(const PrimeContext& ctx, std::string_view text);

}  // namespace iwk
