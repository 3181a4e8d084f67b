#include "iwk/verify.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "iwk/cyclo_eval.hpp"
#include "iwk/error.hpp"
#include "iwk/growth_model.hpp"
#include "iwk/kobayashi_rank.hpp"
#include "iwk/lambda_ring.hpp"
#include "iwk/sampling.hpp"
#include "iwk/serialization.hpp"
#include "iwk/special_matrices.hpp"

namespace iwk {
namespace {

// Tally for one named family of checks.
class Check {
 public:
  Check(std::string name, bool& perturb) : name_(std::move(name)), perturb_(perturb) {}

  // Expected value as consumed by the comparison; the first nonzero value
  // is negated when a perturbation is pending.
  std::int64_t expected(std::int64_t v) {
    if (perturb_ && v != 0) {
      perturb_ = false;
      return -v;
    }
    return v;
  }

  void run(const std::function<bool(Json&)>& body) {
    ++cases_;
    Json detail = Json::object();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const Error& e) {
      detail["error"] = e.what();
    }
    if (!ok) {
      ++failures_;
      if (first_failure_.is_null()) first_failure_ = detail;
    }
  }

  Json report() const {
    return Json{{"name", name_},
                {"cases", cases_},
                {"failures", failures_},
                {"first_failure", first_failure_},
                {"passed", failures_ == 0}};
  }

 private:
  std::string name_;
  bool& perturb_;
  int cases_ = 0;
  int failures_ = 0;
  Json first_failure_;
};

int top_level(const PrimeContext& ctx) { return ctx.p() == 3 ? 2 : 1; }

void special_matrix_suite(const PrimeContext& ctx, Sampler& s, int trials, bool& perturb, Json& out) {
  Check check("special-matrix-rank", perturb);
  for (int n = 1; n <= top_level(ctx); ++n) {
    for (int t = 0; t < trials; ++t) {
      const LambdaMatrix a = s.special_matrix(ctx, n);
      check.run([&](Json& d) {
        const NablaResult r = nabla_matrix_tower(ctx, a, n);
        d = Json{{"n", n}, {"A", to_json(a)}, {"result", to_json(r)}};
        return r.closed_form && r.nabla == check.expected(*r.closed_form);
      });
    }
  }
  out.push_back(check.report());
}

void cyclic_suite(const PrimeContext& ctx, Sampler& s, int trials, bool& perturb, Json& out) {
  Check cyclic("cyclic-ord", perturb);
  for (int n = 1; n <= top_level(ctx); ++n) {
    for (int t = 0; t < trials; ++t) {
      const LambdaElement f = s.cyclic_relation(ctx, n);
      cyclic.run([&](Json& d) {
        const NablaResult r = nabla_cyclic(ctx, f, n);
        d = Json{{"n", n}, {"f", to_json(f)}, {"result", to_json(r)}};
        return r.nabla == cyclic.expected(*r.closed_form);
      });
    }
  }
  out.push_back(cyclic.report());

  Check torsion("torsion-lambda-mu", perturb);
  for (int t = 0; t < trials; ++t) {
    const LambdaElement f = ctx.prime_power(static_cast<int>(s.uniform(0, 2))) * s.distinguished(ctx, static_cast<int>(s.uniform(0, 1)));
    const int n = std::max(cyclic_stabilization_level(ctx, f), top_level(ctx));
    torsion.run([&](Json& d) {
      const NablaResult r = nabla_torsion_tower(ctx, LambdaPresentation::cyclic(f), n);
      d = Json{{"n", n}, {"f", to_json(f)}, {"result", to_json(r)}};
      return r.nabla == torsion.expected(*r.closed_form);
    });
  }
  out.push_back(torsion.report());
}

void coleman_suite(const PrimeContext& ctx, Sampler& s, int trials, bool& perturb, Json& out) {
  const int n_max = top_level(ctx) + 1;
  Check parity("parity-congruence", perturb);
  Check basis("good-basis", perturb);
  Check closed("coleman-closed-form", perturb);
  for (int t = 0; t < trials; ++t) {
    const ColemanData cd = s.coleman(ctx);
    parity.run([&](Json& d) {
      d = Json{{"data", to_json(cd)}};
      return parity_congruence_check(ctx, cd, n_max).passed;
    });
    GoodBasis gb;
    basis.run([&](Json& d) {
      gb = good_basis_transform(ctx, cd, n_max);
      d = Json{{"data", to_json(cd)}, {"basis", to_json(gb)}};
      return is_good_basis(ctx, cd, gb.b, n_max);
    });
    if (gb.b.det().is_zero()) continue;
    const ColemanData good = cd.transformed(gb.b);
    const int n = top_level(ctx);
    closed.run([&](Json& d) {
      d = Json{{"n", n}, {"data", to_json(good)}};
      const LambdaMatrix& col = n % 2 == 1 ? good.col_minus() : good.col_plus();
      if (det_ord_at_eps(ctx, n, col).is_infinite()) {
        // Both sides infinite: the brute force must refuse.
        try {
          nabla_coleman_tower(ctx, good, n);
          return false;
        } catch (const Error& e) {
          return e.kind() == ErrorKind::UndefinedRank;
        }
      }
      const NablaResult r = nabla_coleman_tower(ctx, good, n);
      d["result"] = to_json(r);
      return r.closed_form && r.nabla == closed.expected(*r.closed_form);
    });
  }
  out.push_back(parity.report());
  out.push_back(basis.report());
  out.push_back(closed.report());
}

void degree_suite(const PrimeContext& ctx, bool& perturb, Json& out) {
  Check degrees("degree-identities", perturb);
  for (int n = 1; n <= 8; ++n) {
    degrees.run([&](Json& d) {
      const DegreeIdentities id = degree_identities(ctx, n);
      d = to_json(id);
      const std::int64_t deg = n % 2 == 1 ? id.deg_tilde_plus : id.deg_tilde_minus + 1;
      return id.odd_ok && id.even_ok && deg == degrees.expected(id.s_prev);
    });
  }
  out.push_back(degrees.report());

  Check growth("growth-telescoping", perturb);
  growth.run([&](Json& d) {
    const InvariantSet inv{ctx.p(), 1, 2, 0, 1, 1};
    const GrowthTable table = sha_growth(inv, 0, 0, 6);
    d = to_json(table);
    std::int64_t sum = 0;
    for (const auto& row : table.rows) {
      sum += row.delta_e;
      if (row.delta_e != nabla_x_formula(inv, row.n) - inv.r_inf) return false;
    }
    return sum == growth.expected(table.rows.back().e_n - table.e0);
  });
  out.push_back(growth.report());
}

}  // namespace

Json run_verification(const PrimeContext& ctx, const VerifyOptions& options) {
  const std::vector<std::string> suites{"all", "thm-app", "lemma-3.3", "parity", "degrees"};
  if (std::find(suites.begin(), suites.end(), options.suite) == suites.end()) {
    throw Error(ErrorKind::InvalidInput, "unknown suite \"" + options.suite + "\"");
  }
  if (options.trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be positive");
  Sampler s(options.seed);
  bool perturb = options.perturb;
  Json checks = Json::array();
  const bool all = options.suite == "all";
  if (all || options.suite == "thm-app") special_matrix_suite(ctx, s, options.trials, perturb, checks);
  if (all || options.suite == "lemma-3.3") cyclic_suite(ctx, s, options.trials, perturb, checks);
  if (all || options.suite == "parity") coleman_suite(ctx, s, options.trials, perturb, checks);
  if (all || options.suite == "degrees") degree_suite(ctx, perturb, checks);
  bool passed = true;
  for (const auto& c : checks) passed = passed && c.at("passed").get<bool>();
  return Json{{"suite", options.suite},
              {"p", ctx.p()},
              {"precision", ctx.precision()},
              {"margin", ctx.margin()},
              {"seed", options.seed},
              {"trials", options.trials},
              {"perturbed", options.perturb},
              {"checks", checks},
              {"passed", passed}};
}

}  // namespace iwk
