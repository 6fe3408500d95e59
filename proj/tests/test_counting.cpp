#include <doctest.h>

#include <random>

#include "vslab/counting.hpp"
#include "vslab/error.hpp"

using namespace vslab;

namespace {

FamilySpec fam(std::uint32_t p, std::size_t d, std::size_t s, std::vector<std::uint32_t> a, std::uint32_t k = 1) {
  std::vector<Elem> ae;
  for (auto x : a) ae.push_back(Elem{x});
  return FamilySpec::make(Field::make(p, k), d, s, ae);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("interpolating_b0 examples") {
  const auto spec = fam(5, 3, 1, {0});
  // T(T-1)(T-4) = T^3 - 5T^2 + 4T = T^3 + 4T over F_5.
  const auto hit = interpolating_b0(spec, {Elem{0}, Elem{1}, Elem{4}});
  REQUIRE(hit);
  CHECK(hit->first == std::vector<Elem>{Elem{4}});
  CHECK(hit->second == Elem{0});
  CHECK_FALSE(interpolating_b0(spec, {Elem{0}, Elem{1}, Elem{2}}));
  CHECK(code_of([&] { interpolating_b0(spec, {Elem{0}, Elem{1}}); }) == Errc::not_unique_regime);
}

TEST_CASE("chi_r methods") {
  const auto small = fam(5, 3, 1, {0});
  CHECK(chi_r(small, 4, ChiMethod::profile) == 0);
  CHECK(chi_r(small, 4, ChiMethod::subsets) == 0);
  // Monic cubics T^3 + bT + c vanish on {x,y,z} iff x + y + z = 0.
  int oracle = 0;
  for_each_subset(5, 3, [&](const auto& s) { oracle += (s[0].v + s[1].v + s[2].v) % 5 == 0; });
  CHECK(chi_r(small, 3, ChiMethod::subsets) == oracle);
  CHECK(chi_r(small, 3, ChiMethod::profile) == oracle);

  const auto spec = fam(7, 4, 1, {1});
  CHECK(chi_r(spec, 4, ChiMethod::profile) == chi_r(spec, 4, ChiMethod::subsets));
  CHECK(code_of([&] { chi_r(spec, 3, ChiMethod::profile); }) == Errc::regime_violation);
  CHECK(code_of([&] { chi_r(spec, 4, ChiMethod::subsets, {1, 10, 0}); }) == Errc::budget_exceeded);
}

TEST_CASE("for_each_subset enumerates C(q, r) sorted subsets") {
  std::vector<std::vector<Elem>> all;
  for_each_subset(6, 3, [&](const auto& s) { all.push_back(s); });
  CHECK(all.size() == 20);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& s : all) CHECK(std::is_sorted(s.begin(), s.end()));
  int count = 0;
  for_each_subset(4, 5, [&](const auto&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("s_mn methods and symmetry") {
  const auto spec = fam(5, 3, 1, {0});
  CHECK(s_mn(spec, 3, 1, SmnMethod::profile) == s_mn(spec, 3, 1, SmnMethod::brute));
  CHECK(s_mn(spec, 4, 1, SmnMethod::profile) == 0);
  const auto t = scan_family(spec);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(scan_smn(t, m, n) == scan_smn(t, n, m));
      CHECK(s_mn(spec, m, n, SmnMethod::brute) == scan_smn(t, m, n));
    }
}

TEST_CASE("gamma counts") {
  for (const auto& spec : {fam(5, 4, 1, {2}), fam(7, 4, 2, {1, 3}), fam(5, 5, 0, {})}) {
    const auto t = scan_family(spec);
    const BigInt qds = ipow(BigInt(spec.field->q()), spec.d - spec.s);
    CHECK(gamma_counts_r(t, 1).closed == qds);
    for (std::size_t r = 1; r <= spec.d; ++r) {
      const auto g = gamma_counts_r(t, r);
      CHECK(g.affine_open == factorial(r) * scan_chi(t, r));
      CHECK(g.closed >= g.affine_open);
      for (std::size_t n = 1; n <= spec.d; ++n) {
        const auto h = gamma_counts_mn(t, r, n);
        CHECK(h.affine_open == factorial(r) * factorial(n) * scan_smn(t, r, n));
        CHECK(h.closed >= h.affine_open);
      }
    }
    // (1,1): the closed count includes c1 = c2, so it is q^{d-s+1} exactly.
    CHECK(gamma_counts_mn(t, 1, 1).closed == qds * spec.field->q());
  }
}

TEST_CASE("closed Gamma_r* agrees with direct tuple enumeration on a tiny field") {
  const auto spec = fam(5, 4, 1, {1});
  const Field& f = *spec.field;
  const auto t = scan_family(spec);
  for (std::size_t r = 1; r <= 3; ++r) {
    BigInt direct = 0;
    enumerate_b(spec, [&](const std::vector<Elem>& b) {
      for (Elem b0 : f.elements()) {
        const UniPoly g = family_poly(spec, b, b0);
        std::vector<Elem> alpha(r, Elem{0});
        while (true) {
          direct += divides(f, g, alpha);
          std::size_t i = r;
          while (i > 0 && alpha[i - 1].v == 4) alpha[--i].v = 0;
          if (i == 0) break;
          ++alpha[i - 1].v;
        }
      }
    });
    CHECK(scan_gamma_closed_r(t, r) == direct);
  }
}

TEST_CASE("linear_system_audit") {
  const auto spec = fam(5, 4, 1, {3});
  const auto audit = linear_system_audit(spec, {Elem{0}}, {Elem{1}});
  CHECK(audit.rank == 2);
  CHECK(audit.count_all == 25);
  // Exhaustive over (b2, b1, b01, b02) in F_5^4.
  std::vector<Elem> rhs;
  const Matrix m = linear_system_matrix(spec, {Elem{0}}, {Elem{1}}, &rhs);
  const Field& f = *spec.field;
  int all = 0, strict = 0;
  for (std::uint32_t x = 0; x < 625; ++x) {
    const std::vector<Elem> v{Elem{x % 5}, Elem{x / 5 % 5}, Elem{x / 25 % 5}, Elem{x / 125}};
    bool ok = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      Elem acc{0};
      for (std::size_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(m[i][j], v[j]));
      ok = ok && acc == rhs[i];
    }
    all += ok;
    strict += ok && v[2] != v[3];
  }
  CHECK(audit.count_all == all);
  CHECK(audit.count_strict == strict);
  CHECK(code_of([&] { linear_system_audit(spec, {Elem{0}}, {Elem{0}}); }) == Errc::overlapping_subsets);
  CHECK(code_of([&] { linear_system_audit(spec, {Elem{0}, Elem{2}}, {Elem{1}, Elem{3}}); }) == Errc::regime_violation);
}

TEST_CASE("jacobian_rank") {
  const auto spec = fam(7, 4, 1, {0});
  const Field& f = *spec.field;
  // (T-1)(T-2)(T-3)(T-x) with T^3 coefficient 0 forces x = -6 = 1: use roots 1,2,3,1.
  const UniPoly g = UniPoly::from_roots(f, std::vector<Elem>{Elem{1}, Elem{2}, Elem{3}, Elem{1}});
  REQUIRE(g.coeff(3) == Elem{0});
  const std::vector<Elem> b0_full{g.coeff(2), g.coeff(1), g.coeff(0)};
  CHECK(jacobian_rank(spec, b0_full, {Elem{2}}) == 1);
  CHECK(jacobian_rank(spec, b0_full, {Elem{2}, Elem{3}}) == 2);
  CHECK(jacobian_rank(spec, b0_full, {Elem{1}, Elem{1}}) == 1);
  CHECK(code_of([&] { jacobian_rank(spec, b0_full, {Elem{4}}); }) == Errc::not_on_variety);

  // Sampled points with distinct simple roots have full rank.
  std::mt19937 rng(8);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> b0(3);
    for (auto& x : b0) x = Elem{static_cast<std::uint32_t>(rng() % 7)};
    const UniPoly h = family_poly(spec, {b0[0], b0[1]}, b0[2]);
    std::vector<Elem> simple;
    for (auto [root, mult] : root_profile(f, h).multiplicity)
      if (mult == 1) simple.push_back(root);
    if (simple.empty()) continue;
    CHECK(jacobian_rank(spec, b0, simple) == simple.size());
    ++checked;
  }
  CHECK(checked > 20);
}
