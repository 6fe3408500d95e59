#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vslab/bigint.hpp"
#include "vslab/family.hpp"
#include "vslab/linalg.hpp"
#include "vslab/scan.hpp"

namespace vslab {

using ChiVector = std::map<std::size_t, BigInt>;
using SMatrix = std::map<std::pair<std::size_t, std::size_t>, BigInt>;

enum class ChiMethod { profile, subsets };
enum class SmnMethod { profile, brute };

struct CountOptions {
  std::size_t workers = 1;
  /// Cap on enumerated subsets (or subset pairs) for the oracle methods.
  std::uint64_t subset_budget = 1'000'000;
  /// Cap on profiles for the scan; 0 means unlimited.
  std::uint64_t profile_budget = 0;
};

/// Number of r-subsets of F_q on which some f_b + b0 vanishes.
BigInt chi_r(const FamilySpec& spec, std::size_t r, ChiMethod method, const CountOptions& opt = {});

/// The unique (b, b0) with f_b + b0 vanishing on the subset, if any.
std::optional<std::pair<std::vector<Elem>, Elem>> interpolating_b0(const FamilySpec& spec,
                                                                   const std::vector<Elem>& subset);

BigInt s_mn(const FamilySpec& spec, std::size_t m, std::size_t n, SmnMethod method, const CountOptions& opt = {});

/// chi_r for r in [lo, hi] read off a scan.
ChiVector chi_vector(const ScanTotals& t, std::size_t lo, std::size_t hi);
/// S_{m,n} for 1 <= m, n <= d with lo <= m + n <= hi.
SMatrix s_matrix(const ScanTotals& t, std::size_t lo, std::size_t hi);

struct GammaCounts {
  BigInt affine_open;
  BigInt closed;
};

GammaCounts gamma_counts_r(const ScanTotals& t, std::size_t r);
GammaCounts gamma_counts_mn(const ScanTotals& t, std::size_t m, std::size_t n);
GammaCounts gamma_counts_r(const FamilySpec& spec, std::size_t r, const CountOptions& opt = {});
GammaCounts gamma_counts_mn(const FamilySpec& spec, std::size_t m, std::size_t n, const CountOptions& opt = {});

struct LinearAudit {
  std::size_t rank = 0;
  BigInt count_all;
  BigInt count_strict;
};

/// Unknowns ordered (b_{d-s-1}, ..., b_1, b01, b02); rows
/// sum_i b_i x^i + b0j = -f_a(x) for x in the j-th subset.
Matrix linear_system_matrix(const FamilySpec& spec, const std::vector<Elem>& g1, const std::vector<Elem>& g2,
                            std::vector<Elem>* rhs = nullptr);
LinearAudit linear_system_audit(const FamilySpec& spec, const std::vector<Elem>& g1, const std::vector<Elem>& g2);

/// b0_full = (b_{d-s-1}, ..., b_1, b0).
std::size_t jacobian_rank(const FamilySpec& spec, const std::vector<Elem>& b0_full, const std::vector<Elem>& alpha);

/// Calls fn on every r-subset of {0..q-1} in lexicographic order.
void for_each_subset(std::uint32_t q, std::size_t r, const std::function<void(const std::vector<Elem>&)>& fn);

}  // namespace vslab
