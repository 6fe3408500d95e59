#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vslab/gf.hpp"
#include "vslab/upoly.hpp"

namespace vslab {

enum class SmallFieldPolicy { error, warn };

/// f_b = T^d + a_{d-1}T^{d-1} + ... + a_{d-s}T^{d-s} + b_{d-s-1}T^{d-s-1} + ... + b_1 T.
///
/// a is stored as (a_{d-1}, ..., a_{d-s}); every b vector as (b_{d-s-1}, ..., b_1).
struct FamilySpec {
  FieldPtr field;
  std::size_t d = 0;
  std::size_t s = 0;
  std::vector<Elem> a;
  /// Set when q <= d and the policy was warn.
  bool small_field = false;

  static FamilySpec make(FieldPtr field, std::size_t d, std::size_t s, std::vector<Elem> a,
                         SmallFieldPolicy policy = SmallFieldPolicy::warn);

  /// Number of free coefficients b, i.e. d - s - 1.
  std::size_t free_count() const noexcept { return d - s - 1; }
  /// q^{d-s-1}.
  std::uint64_t b_count() const;
  /// "q=<desc>;d=<d>;s=<s>;a=<comma list>"
  std::string key() const;
};

/// f_a = T^d + the fixed a-terms.
UniPoly fixed_part(const FamilySpec& spec);
UniPoly family_poly(const FamilySpec& spec, const std::vector<Elem>& b, Elem b0);

struct ValueProfile {
  /// counts[index(c)] = #{t : f_b(t) = c}
  std::vector<std::uint32_t> counts;
  std::size_t distinct() const;
};

ValueProfile value_profile(const FamilySpec& spec, const std::vector<Elem>& b);

/// The b vector at a given position of the canonical lexicographic order
/// (first component most significant).
std::vector<Elem> b_at(const FamilySpec& spec, std::uint64_t index);

/// Calls fn(b) for b in [begin, end) of the canonical order.
void enumerate_b(const FamilySpec& spec, std::uint64_t begin, std::uint64_t end,
                 const std::function<void(const std::vector<Elem>&)>& fn);
inline void enumerate_b(const FamilySpec& spec, const std::function<void(const std::vector<Elem>&)>& fn) {
  enumerate_b(spec, 0, spec.b_count(), fn);
}

/// Splits [0, total) into at most `parts` contiguous nonempty ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, std::size_t parts);

/// Parses "1,2" (or "" for s = 0) into a vector of elements of the field.
std::vector<Elem> parse_elems(const Field& f, const std::string& text);
std::string elems_text(const std::vector<Elem>& v);

}  // namespace vslab
