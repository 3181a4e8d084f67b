#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwk {

enum class ErrorKind {
  InvalidInput,
  ZeroElement,
  DuplicateLevel,
  PrecisionUnstable,
  NotNested,
  PhiDivides,
  NotTorsion,
  SingularMatrix,
  UndefinedRank,
  NotSpecial,
  DegenerateColeman,
  NotCoprime,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind names the violated
/// precondition; the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace iwk
