#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "iwk/context.hpp"

namespace iwk {

struct VerifyOptions {
  std::string suite = "all";  // all | thm-app | lemma-3.3 | parity | degrees
  int trials = 10;
  std::uint64_t seed = 0;
  /// Negates the first nonzero closed form consumed by the run, so a correct
  /// build must then report failure.
  bool perturb = false;
};

/// Runs the randomized checks of the chosen suite at ctx's prime. The report
/// holds one entry per check and an overall "passed".
nlohmann::json run_verification(const PrimeContext& ctx, const VerifyOptions& options);

}  // namespace iwk
