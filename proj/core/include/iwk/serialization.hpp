#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "iwk/coleman_data.hpp"
#include "iwk/context.hpp"
#include "iwk/cyclo_eval.hpp"
#include "iwk/growth_model.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_element.hpp"
#include "iwk/lambda_matrix.hpp"
#include "iwk/lambda_ring.hpp"
#include "iwk/rational_poly.hpp"
#include "iwk/special_matrices.hpp"

namespace iwk {

using Json = nlohmann::json;

/// {"coeffs": ["a0", "a1", ...]}, decimal strings.
Json to_json(const LambdaElement& f);
/// Integral polynomials as above; otherwise {"numerator": ..., "denominator": "d"}.
Json to_json(const RationalPoly& f);
/// Row arrays [[a, c], [b, d]] of polynomial objects.
Json to_json(const LambdaMatrix& a);
/// Integer, or the string "inf".
Json to_json(const ExtendedValuation& v);
Json to_json(const OmegaTower& t);
Json to_json(const IwasawaInvariants& inv);
Json to_json(const NablaResult& r);
Json to_json(const SpecialReport& r);
Json to_json(const BDFactorization& f);
Json to_json(const ParityReport& r);
Json to_json(const GoodBasis& g);
Json to_json(const RodReport& r);
Json to_json(const GrowthTable& t);
Json to_json(const DegreeIdentities& d);
Json to_json(const ColemanData& cd);

/// Accepts {"coeffs": [...]} (strings or integers), a bare coefficient array,
/// an integer, or a string of polynomial text.
LambdaElement polynomial_from_json(const PrimeContext& ctx, const Json& j);
/// Accepts row arrays of polynomial values, or a string in the matrix grammar.
LambdaMatrix matrix_from_json(const PrimeContext& ctx, const Json& j);
/// {"col_plus": matrix, "col_minus": matrix}; the constructor enforces the invariants.
ColemanData coleman_from_json(const PrimeContext& ctx, const Json& j);
/// {"ambient": k, "columns": [[poly, ...], ...]}.
LambdaPresentation presentation_from_json(const PrimeContext& ctx, const Json& j);
InvariantSet invariants_from_json(const Json& j);

/// JSON when the text parses as JSON, otherwise the text itself as a string
/// value (fed to the textual grammars).
Json parse_payload(std::string_view text);

}  // namespace iwk
