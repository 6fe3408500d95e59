#include <doctest.h>

#include <random>

#include "vslab/error.hpp"
#include "vslab/mpoly.hpp"
#include "vslab/upoly.hpp"

using namespace vslab;

namespace {

MultiPoly B(std::uint32_t p, std::size_t n, std::size_t i) { return MultiPoly::variable(p, n, i); }
MultiPoly C(std::uint32_t p, std::size_t n, long long c) { return MultiPoly::constant(p, n, c); }

MultiPoly random_mpoly(std::uint32_t p, std::size_t nvars, std::mt19937& rng, int terms, std::uint32_t max_exp) {
  MultiPoly r(p, nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars);
    for (auto& x : e) x = rng() % (max_exp + 1);
    r.add_term(e, rng() % p);
  }
  return r;
}

UniPoly specialize(const Field& f, const TPoly& t, const std::vector<std::uint32_t>& pt) {
  std::vector<Elem> c;
  for (const auto& m : t) c.push_back(Elem{m.eval(pt)});
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("mpoly_arith examples") {
  const std::uint32_t p = 5;
  const MultiPoly b0 = B(p, 2, 0), b1 = B(p, 2, 1);
  const MultiPoly prod = (b1 + b0) * (b1 - b0);
  CHECK(prod == b1 * b1 - b0 * b0);
  CHECK(exact_div(prod, b1 - b0) == b1 + b0);
  try {
    exact_div(b1 * b1 + C(p, 2, 1), b0);
    FAIL("expected InexactDivision");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inexact_division);
  }
  CHECK(to_text(prod, b_names(2)) == "B1^2 + 4*B0^2");
  CHECK(to_text(MultiPoly(p, 2), b_names(2)) == "0");
}

TEST_CASE("exact_div inverts multiplication on random operands") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = random_mpoly(7, 3, rng, 6, 3), b = random_mpoly(7, 3, rng, 4, 2);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("Bareiss and Laplace determinants agree and specialize correctly") {
  std::mt19937 rng(23);
  auto field = Field::make(7, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    MultiMatrix m(n, std::vector<MultiPoly>(n));
    for (auto& row : m)
      for (auto& x : row) x = random_mpoly(7, 2, rng, 2, 2);
    const MultiPoly db = det_bareiss(m), dl = det_laplace(m);
    CHECK(db == dl);
    for (int k = 0; k < 5; ++k) {
      const std::vector<std::uint32_t> pt{static_cast<std::uint32_t>(rng() % 7), static_cast<std::uint32_t>(rng() % 7)};
      std::vector<std::vector<Elem>> num(n, std::vector<Elem>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) num[i][j] = Elem{m[i][j].eval(pt)};
      CHECK(Elem{db.eval(pt)} == vslab::determinant(*field, num));
    }
  }
}

TEST_CASE("symbolic resultant examples") {
  const std::uint32_t p = 5;
  const MultiPoly b0 = B(p, 2, 0), b1 = B(p, 2, 1);
  const TPoly f{b0, b1, C(p, 2, 1)};
  const TPoly df{b1, C(p, 2, 2)};
  // Res(T^2 + B1 T + B0, 2T + B1) = 4 B0 - B1^2
  CHECK(symbolic_resultant(f, df) == scale(b0, 4) - b1 * b1);

  // d=3, s=1, a=(1): F = T^3 + T^2 + B1 T + B0, divided difference on the diagonal is F'.
  const TPoly F{b0, b1, C(p, 2, 1), C(p, 2, 1)};
  const TPoly dF{b1, C(p, 2, 2), C(p, 2, 3)};
  CHECK(symbolic_resultant(F, dF).degree_in(0) == 2);
  CHECK_FALSE(symbolic_subres1(F, dF).is_zero());

  try {
    symbolic_resultant(TPoly{b0, MultiPoly(p, 2)}, df);
    FAIL("expected DegenerateLeadingCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_leading_coefficient);
  }
}

TEST_CASE("symbolic resultant and subres1 agree with numeric ones at random points") {
  std::mt19937 rng(31);
  for (std::uint32_t p : {5u, 7u}) {
    auto field = Field::make(p, 1);
    for (int c = 0; c < 4; ++c) {
      const std::size_t m = 2 + c % 3, n = 1 + c % 3;
      TPoly f(m + 1), g(n + 1);
      for (std::size_t i = 0; i < m; ++i) f[i] = random_mpoly(p, 3, rng, 3, 2);
      for (std::size_t i = 0; i < n; ++i) g[i] = random_mpoly(p, 3, rng, 3, 2);
      f[m] = C(p, 3, 1 + rng() % (p - 1));
      g[n] = C(p, 3, 1 + rng() % (p - 1));
      const MultiPoly res = symbolic_resultant(f, g), sub = symbolic_subres1(f, g);
      for (int k = 0; k < 100; ++k) {
        std::vector<std::uint32_t> pt(3);
        for (auto& x : pt) x = rng() % p;
        const UniPoly fs = specialize(*field, f, pt), gs = specialize(*field, g, pt);
        CHECK(Elem{res.eval(pt)} == resultant(*field, fs, gs));
        CHECK(Elem{sub.eval(pt)} == subres1(*field, fs, gs));
      }
    }
  }
}

TEST_CASE("weight_decompose") {
  const std::uint32_t p = 7;
  const MultiPoly b0 = B(p, 2, 0), b1 = B(p, 2, 1);
  const WeightSystem w{{4, 2}};
  const auto parts = weight_decompose(b1 * b1 + b0, w);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == 4);
  CHECK(parts.begin()->second == b1 * b1 + b0);

  const std::size_t d = 5;
  Exponents e(1, d - 1);
  CHECK(WeightSystem{{d}}.weight(e) == d * (d - 1));

  std::mt19937 rng(3);
  const MultiPoly f = random_mpoly(p, 3, rng, 12, 4);
  MultiPoly sum(p, 3);
  for (const auto& [wt, comp] : weight_decompose(f, WeightSystem{{3, 2, 1}})) {
    for (const auto& [ex, c] : comp.terms()) CHECK(WeightSystem{{3, 2, 1}}.weight(ex) == wt);
    sum = sum + comp;
  }
  CHECK(sum == f);
}

TEST_CASE("scalar_ratio") {
  const MultiPoly b0 = B(5, 2, 0), b1 = B(5, 2, 1);
  const MultiPoly f = b0 * b0 + scale(b1, 2);
  CHECK(scalar_ratio(scale(f, 3), f) == 3);
  CHECK(scalar_ratio(f + b0, f) == 0);
  CHECK(scalar_ratio(MultiPoly(5, 2), f) == 0);
}
