#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vslab/mpoly.hpp"

namespace vslab {

/// Generic monic F = T^d + sum_{i in free} B_i T^i over F_p; variable j of the
/// result is B_{free[j]} with free sorted ascending.
struct GenericFamily {
  std::uint32_t p = 0;
  std::size_t d = 0;
  std::vector<std::size_t> free;
  TPoly F;
  TPoly dF;  // derivative in T, trailing zero coefficients removed
  std::vector<std::string> names() const;
  /// Index of B_i among the variables, if free.
  std::optional<std::size_t> var(std::size_t i) const;
};

GenericFamily generic_family(std::uint32_t p, std::size_t d, std::vector<std::size_t> free);

/// (-1)^{d(d-1)/2} Res_T(F, dF/dT).
MultiPoly generic_disc(const GenericFamily& g);
MultiPoly generic_disc(std::uint32_t p, std::size_t d, const std::vector<std::size_t>& free);

enum class AppendixCase { coprime, p_divides_d, p_divides_d_minus_1_even, p_divides_d_minus_1_odd };
enum class Match { exact, up_to_sign, up_to_scalar, failed };

std::string case_name(AppendixCase c);
std::string match_name(Match m);
AppendixCase select_case(std::uint32_t p, std::size_t d);

struct AppendixReport {
  std::string check;  // "case" or "subres1"
  std::uint32_t p = 0;
  std::size_t d = 0;
  AppendixCase tag = AppendixCase::coprime;
  std::vector<std::string> names;
  MultiPoly computed;
  MultiPoly target;
  Match matched = Match::failed;
  std::uint32_t scalar = 0;
  /// deg_{B0} of the resultant behind the check, against the expected d - 1.
  std::size_t deg_b0 = 0;
  /// Every monomial of the resultant has weight d(d-1) under wt(B_j) = d - j.
  bool weighted_homogeneous = false;
  bool passed() const { return matched != Match::failed; }
};

/// The closed form for the case selected by (p, d); CaseMismatch when
/// `expected` is given and disagrees.
AppendixReport appendix_case_check(std::uint32_t p, std::size_t d, std::optional<AppendixCase> expected = {});

/// Looks for the predicted monomial of the first subresultant of F and F'.
AppendixReport subres1_terms_check(std::uint32_t p, std::size_t d);

/// Whether every monomial of f has the given weight under wt(B_{free[j]}) = d - free[j].
bool has_weight(const MultiPoly& f, const GenericFamily& g, std::uint64_t weight);

}  // namespace vslab
