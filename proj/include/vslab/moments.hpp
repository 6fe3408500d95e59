#pragma once

#include <optional>

#include "vslab/bigint.hpp"
#include "vslab/counting.hpp"
#include "vslab/family.hpp"
#include "vslab/scan.hpp"

namespace vslab {

/// sum_{r=1}^d (-1)^{r-1} / r!
BigRational mu(std::size_t d);

/// sum_{r=1}^d (-1)^{r-1} C(q, r) q^{1-r}
BigRational cohen_exact_mean(const BigInt& q, std::size_t d);

/// Direct averages over every b: each member is evaluated at every point.
BigRational value_set_mean(const FamilySpec& spec);
BigRational value_set_second_moment(const FamilySpec& spec);

/// The same averages read off a scan.
BigRational scan_mean(const FamilySpec& spec, const ScanTotals& t);
BigRational scan_second_moment(const FamilySpec& spec, const ScanTotals& t);

/// Requires 1 <= s <= d-2 and chi_r for every r in [d-s+1, d].
BigRational reconstruct_mean(const FamilySpec& spec, const ChiVector& chi);

enum class SecondMomentMode { paper, exact };

/// paper: closed-form middle term for m+n <= d-s, S needed for d-s+1 <= m+n <= 2d.
/// exact: S needed for every 2 <= m+n <= 2d.
BigRational reconstruct_second_moment(const FamilySpec& spec, const BigRational& mean, const SMatrix& S,
                                      SecondMomentMode mode);

struct MomentReport {
  std::string key;
  std::uint32_t q = 0;
  std::size_t d = 0, s = 0;
  BigRational mean, second_moment;
  ChiVector chi;
  SMatrix S;
  std::optional<BigRational> reconstructed_mean;
  BigRational reconstructed_exact, reconstructed_paper;
  BigRational mu_q, mean_residual, mu2_q2, second_residual, paper_residual;
};

MomentReport moment_report(const FamilySpec& spec, const ScanTotals& t);

}  // namespace vslab
