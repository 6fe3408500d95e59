#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vslab {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the highest-indexed variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

/// Sparse polynomial over F_p in a fixed number of variables.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, std::uint32_t, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static MultiPoly constant(std::uint32_t p, std::size_t nvars, long long c);
  static MultiPoly variable(std::uint32_t p, std::size_t nvars, std::size_t i);
  static MultiPoly monomial(std::uint32_t p, const Exponents& e, long long c);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of a monomial (0 when absent).
  std::uint32_t coeff(const Exponents& e) const;
  /// Adds c to the coefficient of e, dropping it if it becomes zero.
  void add_term(const Exponents& e, std::uint32_t c);

  std::size_t degree_in(std::size_t var) const;
  std::size_t total_degree() const;

  /// Value at a point of F_p^nvars.
  std::uint32_t eval(const std::vector<std::uint32_t>& point) const;
  /// Sets the listed variables to zero (drops every term using them).
  MultiPoly drop_vars(const std::vector<std::size_t>& vars) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::uint32_t p_ = 0;
  std::size_t nvars_ = 0;
  Terms terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, std::uint32_t c);

/// Exact quotient a / b; throws InexactDivision if b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

/// If a = lambda * b for a single nonzero lambda in F_p, returns lambda; else 0.
std::uint32_t scalar_ratio(const MultiPoly& a, const MultiPoly& b);

using MultiMatrix = std::vector<std::vector<MultiPoly>>;

/// Fraction-free Bareiss elimination, pivot chosen as the sparsest nonzero
/// entry in the current column.
MultiPoly det_bareiss(MultiMatrix m);
/// Cofactor expansion; exponential, meant for dimension <= 6.
MultiPoly det_laplace(const MultiMatrix& m);
/// Laplace for dimension <= 6, Bareiss above.
MultiPoly determinant(const MultiMatrix& m);

/// Polynomial in T with MultiPoly coefficients, low-to-high.
using TPoly = std::vector<MultiPoly>;

MultiPoly symbolic_principal_subresultant(const TPoly& f, const TPoly& g, std::size_t j);
MultiPoly symbolic_resultant(const TPoly& f, const TPoly& g);
MultiPoly symbolic_subres1(const TPoly& f, const TPoly& g);

struct WeightSystem {
  std::vector<std::uint64_t> w;
  std::uint64_t weight(const Exponents& e) const;
};

std::map<std::uint64_t, MultiPoly> weight_decompose(const MultiPoly& f, const WeightSystem& ws);

/// Canonical text, grlex descending, e.g. "3*B0^2*B1 + B2 + 4".
std::string to_text(const MultiPoly& f, const std::vector<std::string>& names);
/// Names B0..B{n-1}.
std::vector<std::string> b_names(std::size_t n);

}  // namespace vslab
