#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vslab/gf.hpp"

namespace vslab {

/// Dense univariate polynomial over F_q, coefficients low-to-high.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing. Its degree is undefined; ask is_zero() first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static UniPoly monomial(std::size_t degree, Elem coeff);
  /// prod (T - r) over the given roots.
  static UniPoly from_roots(const Field& f, std::span<const Elem> roots);

  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t degree() const;
  Elem lead() const;
  /// Coefficient of T^i; zero beyond the degree.
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

UniPoly add(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly sub(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly scale(const Field& f, const UniPoly& a, Elem s);
UniPoly derivative(const Field& f, const UniPoly& a);

struct DivMod {
  UniPoly quot;
  UniPoly rem;
};
DivMod divmod(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly gcd(const Field& f, UniPoly a, UniPoly b);

Elem eval(const Field& f, const UniPoly& p, Elem t) noexcept;
/// Values at every element, in canonical element order.
std::vector<Elem> batch_eval(const Field& f, const UniPoly& p);

struct RootProfile {
  std::map<Elem, unsigned> multiplicity;
  std::size_t distinct_count = 0;
  std::size_t total_multiplicity = 0;
};

RootProfile root_profile(const Field& f, const UniPoly& p);

/// Confluent Newton coefficients c_i = Delta^{i-1} p(node_1..node_i), via
/// g_0 = p, c_i = g_{i-1}(node_i), g_i = (g_{i-1} - c_i) / (T - node_i).
/// Repeated nodes are fine; no derivative or factorial appears anywhere.
std::vector<Elem> newton_coeffs(const Field& f, const UniPoly& p, std::span<const Elem> nodes);

/// True iff prod (T - node_i), multiplicities included, divides p.
bool divides(const Field& f, const UniPoly& p, std::span<const Elem> nodes);

/// Determinant of a square matrix over F_q by Gaussian elimination.
Elem determinant(const Field& f, std::vector<std::vector<Elem>> m);

/// Sylvester-matrix resultant, rows of a first. Res(a,b) = lc(a)^deg(b) prod b(roots of a).
Elem resultant(const Field& f, const UniPoly& a, const UniPoly& b);
/// Principal subresultant coefficient of order j (the determinant-minor definition).
Elem principal_subresultant(const Field& f, const UniPoly& a, const UniPoly& b, std::size_t j);
inline Elem subres1(const Field& f, const UniPoly& a, const UniPoly& b) {
  return principal_subresultant(f, a, b, 1);
}

/// (-1)^{d(d-1)/2} Res(p, p') for monic p of degree >= 2.
Elem discriminant(const Field& f, const UniPoly& p);

/// "c0,c1,...,cd" using canonical element indices.
std::string to_text(const UniPoly& p);
UniPoly parse_poly(const Field& f, const std::string& text);

}  // namespace vslab
