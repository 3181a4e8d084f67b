// iwk: command-line front end. Every command prints one JSON document (or
// CSV for `growth --format csv`) and exits 0 on success, 1 when a
// verification fails, 2 on invalid input.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "iwk/cyclo_eval.hpp"
#include "iwk/error.hpp"
#include "iwk/growth_model.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_ring.hpp"
#include "iwk/serialization.hpp"
#include "iwk/special_matrices.hpp"
#include "iwk/verify.hpp"

namespace {

using iwk::Json;

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kMinCliPrecision = 8;

struct Globals {
  long long p = 3;
  std::optional<int> precision;
  int margin = iwk::kDefaultMargin;
  std::uint64_t seed = 0;
  std::string input;
};

int resolve_precision(const Globals& g) {
  if (g.precision) return *g.precision;
  if (const char* env = std::getenv("IWK_PRECISION")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw iwk::Error(iwk::ErrorKind::InvalidInput, "IWK_PRECISION must be an integer");
  }
  return iwk::kDefaultPrecision;
}

iwk::PrimeContext make_context(const Globals& g) {
  const int n = resolve_precision(g);
  if (n < kMinCliPrecision) {
    throw iwk::Error(iwk::ErrorKind::InvalidInput, "precision must be at least " + std::to_string(kMinCliPrecision));
  }
  return iwk::PrimeContext(g.p, n, g.margin);
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw iwk::Error(iwk::ErrorKind::InvalidInput, "cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The inline flag value wins; otherwise the --input payload; otherwise an error.
Json payload(const Globals& g, const std::string& inline_value, const char* what) {
  if (!inline_value.empty()) return iwk::parse_payload(inline_value);
  if (!g.input.empty()) return iwk::parse_payload(read_input(g.input));
  throw iwk::Error(iwk::ErrorKind::InvalidInput, std::string("missing ") + what + " (flag or --input)");
}

void require_level(int n, int least, const char* name) {
  if (n < least) {
    throw iwk::Error(iwk::ErrorKind::InvalidInput, std::string(name) + " must be at least " + std::to_string(least));
  }
}

struct Outcome {
  Json result;
  bool failed = false;
  std::optional<std::string> raw;  // printed verbatim instead of JSON
};

bool nabla_failed(const iwk::NablaResult& r) { return r.agrees.has_value() && !*r.agrees; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kobayashi-rank calculus over the Iwasawa algebra"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("-p,--prime", g.p, "odd prime p")->capture_default_str();
  app.add_option("--precision", g.precision, "coefficient precision N (default 40, or IWK_PRECISION)");
  app.add_option("--margin", g.margin, "stability margin (default 8)")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--input", g.input, "payload file, or - for stdin");

  std::function<Outcome(const iwk::PrimeContext&)> action;
  std::string command;

  int level_m = 0;
  int level_n = 1;
  std::string poly_text;
  std::string matrix_text;
  std::string coleman_text;
  std::string presentation_text;
  std::string invariants_text;

  auto name = [&](CLI::App* sub, std::string label) {
    sub->callback([&command, label] { command = label; });
    return sub;
  };

  auto* phi = name(app.add_subcommand("phi", "cyclotomic factor Phi_m"), "phi");
  phi->add_option("-m", level_m, "level m")->required();

  auto* om = name(app.add_subcommand("omega", "omega_n and its signed factors"), "omega");
  om->add_option("-n", level_n, "level n")->required();

  auto* inv = name(app.add_subcommand("invariants", "Iwasawa mu and lambda of a polynomial"), "invariants");
  inv->add_option("--poly,-f", poly_text, "polynomial (JSON or text)");

  auto* ord = name(app.add_subcommand("ord-eps", "normalised valuation at eps_m"), "ord-eps");
  ord->add_option("-m", level_m, "level m")->required();
  ord->add_option("--poly,-f", poly_text, "polynomial (JSON or text)");

  auto* nabla = app.add_subcommand("nabla", "brute-force Kobayashi rank of one tower step");
  nabla->require_subcommand(1);
  auto* ncyc = name(nabla->add_subcommand("cyclic", "Lambda/(f, omega_n)"), "nabla cyclic");
  ncyc->add_option("--poly,-f", poly_text, "f");
  ncyc->add_option("-n", level_n, "level n")->required();
  auto* ntor = name(nabla->add_subcommand("torsion", "M/omega_n M for M = Lambda^k/relations"), "nabla torsion");
  ntor->add_option("--presentation", presentation_text, "{\"ambient\":k,\"columns\":[...]}");
  ntor->add_option("--poly,-f", poly_text, "cyclic relation f (shorthand)");
  ntor->add_option("-n", level_n, "level n")->required();
  bool sweep = false;
  ntor->add_flag("--sweep", sweep, "report levels 1..n with the detected stabilization level");
  auto* nmat = name(nabla->add_subcommand("matrix", "Lambda_n^2 / <A>_n"), "nabla matrix");
  nmat->add_option("--matrix,-A", matrix_text, "A (JSON or matrix text)");
  nmat->add_option("-n", level_n, "level n")->required();
  auto* ncol = name(nabla->add_subcommand("coleman", "Lambda_n^2 / <F_n>_n"), "nabla coleman");
  ncol->add_option("--coleman", coleman_text, "{\"col_plus\":..., \"col_minus\":...}");
  ncol->add_option("-n", level_n, "level n")->required();

  auto* spec = name(app.add_subcommand("special-check", "special-matrix predicate"), "special-check");
  spec->add_option("--matrix,-A", matrix_text, "A");
  spec->add_option("-n", level_n, "level n")->required();

  auto* fbd = name(app.add_subcommand("factor-bd", "A = B*D factorization"), "factor-bd");
  fbd->add_option("--matrix,-A", matrix_text, "A");
  fbd->add_option("-n", level_n, "level n")->required();

  auto* afn = name(app.add_subcommand("assemble-fn", "F_n from Coleman data"), "assemble-fn");
  afn->add_option("--coleman", coleman_text, "Coleman data");
  afn->add_option("-n", level_n, "level n")->required();

  auto* spz = name(app.add_subcommand("specialize", "good-basis transform"), "specialize");
  spz->add_option("--coleman", coleman_text, "Coleman data");
  spz->add_option("--n-max,-n", level_n, "top level")->required();

  int test_level = -1;
  auto* rod = name(app.add_subcommand("rod-check", "omega_n L^2 cap <B> = omega_n <B> at a finite level"), "rod-check");
  rod->add_option("--matrix,-B", matrix_text, "B");
  rod->add_option("-n", level_n, "level n")->required();
  rod->add_option("--test-level,-T", test_level, "finite level T > n (default n + 1)");

  int n0 = 0;
  long long e0 = 0;
  int n_last = 4;
  std::string format = "json";
  iwk::InvariantSet invset;
  auto add_invariant_flags = [&](CLI::App* sub) {
    sub->add_option("--invariants", invariants_text, "JSON invariant set");
    sub->add_option("--lambda-plus", invset.lambda_plus);
    sub->add_option("--lambda-minus", invset.lambda_minus);
    sub->add_option("--mu-plus", invset.mu_plus);
    sub->add_option("--mu-minus", invset.mu_minus);
    sub->add_option("--r-inf", invset.r_inf);
  };
  auto* grow = name(app.add_subcommand("growth", "e_n difference table"), "growth");
  add_invariant_flags(grow);
  grow->add_option("--n0", n0, "baseline level")->capture_default_str();
  grow->add_option("--e0", e0, "baseline e_{n0}")->capture_default_str();
  grow->add_option("--n-last", n_last, "last level")->capture_default_str();
  grow->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* nx = name(app.add_subcommand("nabla-x", "parity-dispatched nabla formula"), "nabla-x");
  add_invariant_flags(nx);
  nx->add_option("-n", level_n, "level n")->required();

  iwk::VerifyOptions vopt;
  auto* ver = name(app.add_subcommand("verify", "randomized theorem checks"), "verify");
  ver->add_option("--suite", vopt.suite, "all|thm-app|lemma-3.3|parity|degrees")->capture_default_str();
  ver->add_option("--trials", vopt.trials, "cases per family")->capture_default_str();
  ver->add_flag("--perturb", vopt.perturb, "negate one closed form (mutation smoke test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  auto invariants = [&]() {
    iwk::InvariantSet s = invset;
    if (!invariants_text.empty() || !g.input.empty()) s = iwk::invariants_from_json(payload(g, invariants_text, "invariants"));
    s.p = g.p;
    s.validate();
    return s;
  };

  try {
    const iwk::PrimeContext ctx = make_context(g);
    Outcome out;
    if (command == "phi") {
      require_level(level_m, 0, "m");
      out.result = Json{{"m", level_m}, {"phi", iwk::to_json(iwk::cyclotomic_phi(ctx, level_m))}};
    } else if (command == "omega") {
      require_level(level_n, 0, "n");
      out.result = iwk::to_json(iwk::omega_tower(ctx, level_n));
    } else if (command == "invariants") {
      const auto f = iwk::polynomial_from_json(ctx, payload(g, poly_text, "polynomial"));
      out.result = iwk::to_json(iwk::iwasawa_invariants(ctx, f));
    } else if (command == "ord-eps") {
      require_level(level_m, 0, "m");
      const auto f = iwk::polynomial_from_json(ctx, payload(g, poly_text, "polynomial"));
      out.result = Json{{"m", level_m}, {"ord", iwk::to_json(iwk::ord_eps(ctx, level_m, f))},
                        {"resultant", iwk::cyclotomic_resultant(ctx, level_m, f).get_str()}};
    } else if (command == "nabla cyclic") {
      const auto f = iwk::polynomial_from_json(ctx, payload(g, poly_text, "polynomial"));
      const auto r = iwk::nabla_cyclic(ctx, f, level_n);
      out.result = iwk::to_json(r);
      out.failed = nabla_failed(r);
    } else if (command == "nabla torsion") {
      const iwk::LambdaPresentation rel =
          presentation_text.empty() && !poly_text.empty()
              ? iwk::LambdaPresentation::cyclic(iwk::polynomial_from_json(ctx, iwk::parse_payload(poly_text)))
              : iwk::presentation_from_json(ctx, payload(g, presentation_text, "presentation"));
      if (sweep) {
        const auto s = iwk::torsion_tower_sweep(ctx, rel, level_n);
        Json levels = Json::array();
        for (const auto& r : s.levels) {
          levels.push_back(iwk::to_json(r));
          out.failed = out.failed || nabla_failed(r);
        }
        out.result = Json{{"levels", levels},
                          {"stabilization_level", s.stabilization_level ? Json(*s.stabilization_level) : Json(nullptr)}};
      } else {
        const auto r = iwk::nabla_torsion_tower(ctx, rel, level_n);
        out.result = iwk::to_json(r);
        out.failed = nabla_failed(r);
      }
    } else if (command == "nabla matrix") {
      const auto a = iwk::matrix_from_json(ctx, payload(g, matrix_text, "matrix"));
      const auto r = iwk::nabla_matrix_tower(ctx, a, level_n);
      out.result = iwk::to_json(r);
      out.failed = nabla_failed(r);
    } else if (command == "nabla coleman") {
      const auto cd = iwk::coleman_from_json(ctx, payload(g, coleman_text, "Coleman data"));
      const auto r = iwk::nabla_coleman_tower(ctx, cd, level_n);
      out.result = iwk::to_json(r);
      out.failed = nabla_failed(r);
    } else if (command == "special-check") {
      require_level(level_n, 0, "n");
      const auto a = iwk::matrix_from_json(ctx, payload(g, matrix_text, "matrix"));
      out.result = iwk::to_json(iwk::is_special(ctx, a, level_n));
    } else if (command == "factor-bd") {
      require_level(level_n, 0, "n");
      const auto a = iwk::matrix_from_json(ctx, payload(g, matrix_text, "matrix"));
      out.result = iwk::to_json(iwk::factor_bd(ctx, a, level_n));
    } else if (command == "assemble-fn") {
      require_level(level_n, 0, "n");
      const auto cd = iwk::coleman_from_json(ctx, payload(g, coleman_text, "Coleman data"));
      const auto f = iwk::assemble_fn(ctx, cd, level_n);
      out.result = Json{{"F_n", iwk::to_json(f)}, {"det", iwk::to_json(f.det())},
                        {"parity", iwk::to_json(iwk::parity_congruence_check(ctx, cd, level_n))}};
    } else if (command == "specialize") {
      require_level(level_n, 0, "n-max");
      const auto cd = iwk::coleman_from_json(ctx, payload(g, coleman_text, "Coleman data"));
      const auto gb = iwk::good_basis_transform(ctx, cd, level_n);
      const bool ok = iwk::is_good_basis(ctx, cd, gb.b, level_n);
      out.result = iwk::to_json(gb);
      out.result["postconditions_hold"] = ok;
      out.failed = !ok;
    } else if (command == "rod-check") {
      require_level(level_n, 0, "n");
      const auto b = iwk::matrix_from_json(ctx, payload(g, matrix_text, "matrix"));
      const auto rep = iwk::rod_check(ctx, b, level_n, test_level < 0 ? level_n + 1 : test_level);
      out.result = iwk::to_json(rep);
      out.failed = !rep.holds;
    } else if (command == "growth") {
      const auto table = iwk::sha_growth(invariants(), n0, e0, n_last);
      if (format == "csv") out.raw = iwk::growth_csv(table);
      out.result = iwk::to_json(table);
    } else if (command == "nabla-x") {
      out.result = Json{{"n", level_n}, {"nabla_x", iwk::nabla_x_formula(invariants(), level_n)}};
    } else if (command == "verify") {
      vopt.seed = g.seed;
      out.result = iwk::run_verification(ctx, vopt);
      out.failed = !out.result.at("passed").get<bool>();
    } else {
      throw iwk::Error(iwk::ErrorKind::InvalidInput, "unknown command");
    }

    if (out.raw) {
      std::cout << *out.raw;
    } else {
      const Json doc{{"command", command},
                     {"p", ctx.p()},
                     {"precision", ctx.precision()},
                     {"margin", ctx.margin()},
                     {"seed", g.seed},
                     {"result", out.result}};
      std::cout << doc.dump(2) << '\n';
    }
    return out.failed ? kExitFailed : 0;
  } catch (const iwk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << '\n';
    return kExitInvalid;
  }
}
