#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vslab {

/// An element of F_q, stored by its canonical index sum(c_i * p^i) where c_i
/// are the residues of the polynomial-basis representation.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// The finite field F_{p^k} = F_p[T]/(modulus) for an odd prime p.
///
/// Immutable after construction. For q <= kTableLimit the full addition,
/// multiplication, negation and inverse tables are precomputed; above that
/// every operation reduces on the fly.
class Field {
 public:
  static constexpr std::uint32_t kTableLimit = 4096;

  /// Validates p and k; when modulus is empty, picks the irreducible monic
  /// degree-k polynomial of lowest canonical index. modulus is low-to-high and
  /// includes the leading 1.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k,
                                           std::vector<std::uint32_t> modulus = {});

  /// Parses "p^k" or "p^k/c0,c1,...,ck".
  static std::shared_ptr<const Field> parse(const std::string& descriptor);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !mul_.empty(); }

  /// "p^k/modulus-coefficients", e.g. "3^2/1,0,1".
  std::string descriptor() const;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem from_index(std::uint32_t index) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long n) const noexcept;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  Elem add(Elem x, Elem y) const noexcept {
    return has_tables() ? Elem{add_[x.v * q_ + y.v]} : add_slow(x, y);
  }
  Elem neg(Elem x) const noexcept { return has_tables() ? Elem{neg_[x.v]} : neg_slow(x); }
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const noexcept {
    return has_tables() ? Elem{mul_[x.v * q_ + y.v]} : mul_slow(x, y);
  }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const noexcept;

  /// All q elements in canonical-index order; element i has index i.
  std::vector<Elem> elements() const;

 private:
  Field() = default;
  void build_tables();
  Elem add_slow(Elem x, Elem y) const noexcept;
  Elem neg_slow(Elem x) const noexcept;
  Elem mul_slow(Elem x, Elem y) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over F_p by trial division against
/// every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic_low_to_high);

}  // namespace vslab
