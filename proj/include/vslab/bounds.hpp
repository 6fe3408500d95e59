#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vslab/bigint.hpp"
#include "vslab/family.hpp"
#include "vslab/scan.hpp"

namespace vslab {

struct BoundParams {
  /// D_r = rd - r(r+1)/2, delta_r = d!/(d-r)!
  static BigInt D_r(std::size_t d, std::size_t r);
  static BigInt delta_r(std::size_t d, std::size_t r);
  /// D_{m,n} = (m+n)d - C(m+1,2) - C(n+1,2), delta_{m,n} = (d!)^2/((d-m)!(d-n)!)
  static BigInt D_mn(std::size_t d, std::size_t m, std::size_t n);
  static BigInt delta_mn(std::size_t d, std::size_t m, std::size_t n);
  /// xi_{m,n} = C(m,2) + C(n,2) + 1
  static BigInt xi_mn(std::size_t m, std::size_t n);
  /// k0 = -1/2 + sqrt(5+4d)/2 and its floor, computed exactly.
  static double k0(std::size_t d);
  static std::size_t floor_k0(std::size_t d);
  /// h(k) = C(d,k)^2 (d-k)!
  static BigInt h(std::size_t d, std::size_t k);
};

struct Applicability {
  bool mean_main = false;     // |V - mu q|, s >= 1
  bool mean_refined = false;  // sharper mean bound, s >= 1
  bool v2 = false;            // |V2 - mu^2 q^2|, s >= 1
  bool v2_s0 = false;         // s = 0 second moment
  bool chi = false;           // chi_r and Gamma_r*, r in [d-s+1, d]
  bool smn = false;           // S_{m,n}, s >= 1
  bool smn_s0 = false;        // S_{m,n}, s = 0
  bool any() const { return mean_main || mean_refined || v2 || v2_s0 || chi || smn || smn_s0; }
};

Applicability applicability(std::uint64_t q, std::size_t d, std::size_t s, std::uint64_t p);

enum class BoundKind { mean_main, mean_refined, chi, gamma_star, smn, smn_s0, v2, v2_s0 };

std::string kind_name(BoundKind k);

struct BoundArgs {
  std::uint64_t q = 0;
  std::size_t d = 0, s = 0;
  std::optional<std::size_t> r, m, n;
};

/// Right-hand side in double precision (log space when d > 20).
double bound_value(BoundKind kind, const BoundArgs& args);

struct BoundCheck {
  BoundKind kind;
  BoundArgs args;
  BigRational lhs;
  double rhs = 0;
  bool applicable = false;
  /// Empty when not applicable.
  std::optional<bool> pass;
};

/// lhs <= rhs (1 + 1e-9), compared exactly.
bool within(const BigRational& lhs, double rhs);

std::vector<BoundCheck> bound_suite(const FamilySpec& spec, const ScanTotals& t);

enum class Shape { increasing, unimodal, neither };

struct UnimodalityReport {
  std::size_t d = 0;
  double k0 = 0;
  std::size_t floor_k0 = 0;
  std::vector<BigInt> h;
  std::vector<std::size_t> argmax;
  Shape shape = Shape::neither;
  bool floor_k0_is_max = false;
};

UnimodalityReport unimodality_audit(std::size_t d);

}  // namespace vslab
