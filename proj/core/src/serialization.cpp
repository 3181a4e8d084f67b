#include "iwk/serialization.hpp"

#include "iwk/error.hpp"
#include "iwk/expression_parser.hpp"

namespace iwk {
namespace {

mpz_class integer_from_json(const Json& j) {
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorKind::InvalidInput, "coefficient \"" + j.get<std::string>() + "\" is not a decimal integer");
    }
    return v;
  }
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  throw Error(ErrorKind::InvalidInput, "coefficient must be a decimal string or an integer");
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const LambdaElement& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", coeffs}};
}

Json to_json(const RationalPoly& f) {
  if (f.is_integral()) return to_json(f.numerator());
  return Json{{"numerator", to_json(f.numerator())}, {"denominator", f.denominator().get_str()}};
}

Json to_json(const LambdaMatrix& a) {
  return Json::array({Json::array({to_json(a.at(0, 0)), to_json(a.at(0, 1))}),
                      Json::array({to_json(a.at(1, 0)), to_json(a.at(1, 1))})});
}

Json to_json(const ExtendedValuation& v) { return v.is_finite() ? Json(v.value()) : Json("inf"); }

Json to_json(const OmegaTower& t) {
  return Json{{"n", t.n},
              {"omega", to_json(t.omega)},
              {"omega_plus", to_json(t.omega_plus)},
              {"omega_minus", to_json(t.omega_minus)},
              {"omega_tilde_plus", to_json(t.omega_tilde_plus)},
              {"omega_tilde_minus", to_json(t.omega_tilde_minus)}};
}

Json to_json(const IwasawaInvariants& inv) { return Json{{"mu", inv.mu}, {"lambda", inv.lambda}}; }

Json to_json(const NablaResult& r) {
  return Json{{"n", r.n},
              {"ker_length", r.ker_length},
              {"coker_length", r.coker_length},
              {"lower_rank", r.lower_rank},
              {"nabla", r.nabla},
              {"closed_form", optional_int(r.closed_form)},
              {"agrees", r.agrees ? Json(*r.agrees) : Json(nullptr)}};
}

Json to_json(const SpecialReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.per_level) {
    levels.push_back(
        {{"m", l.m}, {"columns_divisible", l.columns_divisible}, {"det_divisible", l.det_divisible}, {"ok", l.ok}});
  }
  return Json{{"n", r.n}, {"per_level", levels}, {"verdict", r.verdict}};
}

Json to_json(const BDFactorization& f) { return Json{{"B", to_json(f.b)}, {"D", to_json(f.d)}}; }

Json to_json(const ParityReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.per_level) {
    levels.push_back({{"m", l.m}, {"reference", l.uses_minus ? "col_minus" : "col_plus"}, {"proportional", l.proportional}});
  }
  return Json{{"n", r.n}, {"per_level", levels}, {"passed", r.passed}};
}

Json to_json(const GoodBasis& g) {
  return Json{{"B", to_json(g.b)},
              {"det_B", to_json(g.b.det())},
              {"exceptional_levels", g.exceptional_levels},
              {"denominator", g.denominator.get_str()},
              {"corrected_levels", g.corrected_levels}};
}

Json to_json(const RodReport& r) {
  return Json{{"holds", r.holds},
              {"intersection_length", r.intersection_length},
              {"scaled_span_length", r.scaled_span_length},
              {"stable", r.stable}};
}

Json to_json(const GrowthTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"n", r.n},
                    {"parity", r.odd ? "odd" : "even"},
                    {"s_prev", r.s_prev},
                    {"delta_e", r.delta_e},
                    {"e_n", r.e_n}});
  }
  return Json{{"n0", t.n0}, {"e0", t.e0}, {"rows", rows}};
}

Json to_json(const DegreeIdentities& d) {
  return Json{{"n", d.n},
              {"deg_tilde_plus", d.deg_tilde_plus},
              {"deg_tilde_minus", d.deg_tilde_minus},
              {"s_prev", d.s_prev},
              {"odd_ok", d.odd_ok},
              {"even_ok", d.even_ok},
              {"expanded", d.expanded}};
}

Json to_json(const ColemanData& cd) {
  return Json{{"col_plus", to_json(cd.col_plus())}, {"col_minus", to_json(cd.col_minus())}};
}

LambdaElement polynomial_from_json(const PrimeContext& ctx, const Json& j) {
  if (j.is_string()) return parse_polynomial(ctx, j.get<std::string>());
  if (j.is_number_integer()) return LambdaElement::constant(integer_from_json(j));
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw Error(ErrorKind::InvalidInput, "polynomial object needs a \"coeffs\" array");
    coeffs = &j.at("coeffs");
  }
  if (!coeffs->is_array()) throw Error(ErrorKind::InvalidInput, "polynomial coefficients must be an array");
  std::vector<mpz_class> c;
  for (const auto& x : *coeffs) c.push_back(integer_from_json(x));
  return LambdaElement(std::move(c));
}

LambdaMatrix matrix_from_json(const PrimeContext& ctx, const Json& j) {
  if (j.is_string()) return parse_matrix(ctx, j.get<std::string>());
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw Error(ErrorKind::InvalidInput, "matrix must be [[a, c], [b, d]] or matrix text");
  }
  return LambdaMatrix(polynomial_from_json(ctx, j[0][0]), polynomial_from_json(ctx, j[0][1]),
                      polynomial_from_json(ctx, j[1][0]), polynomial_from_json(ctx, j[1][1]));
}

ColemanData coleman_from_json(const PrimeContext& ctx, const Json& j) {
  if (!j.is_object() || !j.contains("col_plus") || !j.contains("col_minus")) {
    throw Error(ErrorKind::InvalidInput, "Coleman data needs \"col_plus\" and \"col_minus\"");
  }
  return ColemanData(matrix_from_json(ctx, j.at("col_plus")), matrix_from_json(ctx, j.at("col_minus")));
}

LambdaPresentation presentation_from_json(const PrimeContext& ctx, const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("columns") || !j.at("columns").is_array()) {
    throw Error(ErrorKind::InvalidInput, "presentation needs \"ambient\" and a \"columns\" array");
  }
  LambdaPresentation p;
  const long long k = j.at("ambient").get<long long>();
  if (k < 1) throw Error(ErrorKind::InvalidInput, "ambient rank must be positive");
  p.ambient = static_cast<std::size_t>(k);
  for (const auto& col : j.at("columns")) {
    if (!col.is_array() || col.size() != p.ambient) {
      throw Error(ErrorKind::InvalidInput, "each relation column must have \"ambient\" entries");
    }
    std::vector<LambdaElement> c;
    for (const auto& e : col) c.push_back(polynomial_from_json(ctx, e));
    p.columns.push_back(std::move(c));
  }
  return p;
}

InvariantSet invariants_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "invariant set must be a JSON object");
  InvariantSet inv;
  auto get = [&](const char* key, std::int64_t& slot) {
    if (j.contains(key)) slot = j.at(key).get<std::int64_t>();
  };
  get("p", inv.p);
  get("lambda_plus", inv.lambda_plus);
  get("lambda_minus", inv.lambda_minus);
  get("mu_plus", inv.mu_plus);
  get("mu_minus", inv.mu_minus);
  get("r_inf", inv.r_inf);
  inv.validate();
  return inv;
}

Json parse_payload(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) return Json(std::string(text));
  return j;
}

}  // namespace iwk
