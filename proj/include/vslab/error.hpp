#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vslab {

enum class Errc {
  even_characteristic,
  reducible_modulus,
  invalid_argument,
  division_by_zero,
  zero_polynomial,
  non_monic,
  degree_too_small,
  inexact_division,
  degenerate_leading_coefficient,
  length_mismatch,
  regime_violation,
  range_mismatch,
  budget_exceeded,
  not_unique_regime,
  overlapping_subsets,
  not_on_variety,
  missing_parameter,
  degenerate_case,
  case_mismatch,
  schema_mismatch,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library surfaces as this one exception type; callers
// that need to branch inspect code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vslab
