#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resloc {

enum class Errc {
  NotInvertible,
  NotExponentiable,
  RingMismatch,
  ArityMismatch,
  RepeatedWeight,
  RankDeficient,
  Inconsistent,
  MissingZetaEntry,
  NotSymmetric,
  InexactDivision,
  NormalizationFailed,
  DegenerateSystem,
  NotDivisible,
  NoRelationFound,
  SyntaxError,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this type. what() carries
// "<Name>: <detail>" so messages are stable enough for golden tests.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace resloc
