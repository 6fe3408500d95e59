#pragma once

#include <cstdint>
#include <vector>

#include "vslab/bigint.hpp"
#include "vslab/family.hpp"

namespace vslab {

using u128 = unsigned __int128;

struct ScanOptions {
  std::size_t workers = 1;
  /// Maximum number of profiles (q^{d-s-1}); 0 means unlimited.
  std::uint64_t budget = 0;
};

/// Integer sums over every b of the family, from which all per-family
/// statistics are read off exactly. Indices k, l, r, m, n run over [0, d].
///
///   hist[k]    = sum_b #{c : N_b(c) = k}
///   hh[k][l]   = sum_b H_b[k] H_b[l]
///   g[r]       = sum_b G_b[r],  G_b[r] = sum_c (ordered r-tuples whose multiset divides f_b - c)
///   gg[m][n]   = sum_b G_b[m] G_b[n]
struct ScanTotals {
  std::size_t d = 0;
  std::uint64_t profiles = 0;
  u128 sum_v = 0;
  u128 sum_v2 = 0;
  std::vector<u128> hist, hh, g, gg;

  explicit ScanTotals(std::size_t degree = 0);
  void merge(const ScanTotals& other);
  bool operator==(const ScanTotals& other) const = default;

  u128 hh_at(std::size_t k, std::size_t l) const { return hh[k * (d + 1) + l]; }
  u128 gg_at(std::size_t m, std::size_t n) const { return gg[m * (d + 1) + n]; }
};

ScanTotals scan_family(const FamilySpec& spec, const ScanOptions& opt = {});

/// Sum_b sum_c C(N_b(c), r).
BigInt scan_chi(const ScanTotals& t, std::size_t r);
/// Sum_b sum_{c1 != c2} C(N_b(c1), m) C(N_b(c2), n).
BigInt scan_smn(const ScanTotals& t, std::size_t m, std::size_t n);
/// Sum_b sum_c N(N-1)...(N-r+1).
BigInt scan_gamma_open_r(const ScanTotals& t, std::size_t r);
BigInt scan_gamma_closed_r(const ScanTotals& t, std::size_t r);
/// Same as the S count but with falling factorials (ordered tuples).
BigInt scan_gamma_open_mn(const ScanTotals& t, std::size_t m, std::size_t n);
BigInt scan_gamma_closed_mn(const ScanTotals& t, std::size_t m, std::size_t n);

/// Ordered r-tuples, r = 0..max_r, drawn from roots with the given
/// multiplicities (each root used at most its multiplicity).
std::vector<u128> multiset_tuple_counts(const std::vector<unsigned>& multiplicities, std::size_t max_r);

}  // namespace vslab
