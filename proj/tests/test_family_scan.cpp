#include <doctest.h>

#include <set>

#include "vslab/error.hpp"
#include "vslab/family.hpp"
#include "vslab/scan.hpp"

using namespace vslab;

namespace {

FamilySpec fam(std::uint32_t p, std::uint32_t k, std::size_t d, std::size_t s, std::vector<std::uint32_t> a) {
  std::vector<Elem> ae;
  for (auto x : a) ae.push_back(Elem{x});
  return FamilySpec::make(Field::make(p, k), d, s, ae);
}

BigInt falling(std::size_t k, std::size_t r) {
  BigInt out = 1;
  for (std::size_t i = 0; i < r; ++i) out *= static_cast<long>(k) - static_cast<long>(i);
  return r > k ? BigInt(0) : out;
}

// Everything the scan accumulates, recomputed one (b, c) at a time from
// root_profile with the multinomial tuple count.
struct Naive {
  BigInt sum_v = 0, sum_v2 = 0;
  std::vector<BigInt> chi, open_r, closed_r;
  std::vector<std::vector<BigInt>> smn, closed_mn;
};

Naive naive(const FamilySpec& spec) {
  const Field& f = *spec.field;
  const std::size_t d = spec.d;
  Naive n;
  n.chi.assign(d + 1, 0);
  n.open_r.assign(d + 1, 0);
  n.closed_r.assign(d + 1, 0);
  n.smn.assign(d + 1, std::vector<BigInt>(d + 1, 0));
  n.closed_mn.assign(d + 1, std::vector<BigInt>(d + 1, 0));
  enumerate_b(spec, [&](const std::vector<Elem>& b) {
    std::vector<std::size_t> N(f.q());
    std::vector<std::vector<u128>> T(f.q());
    std::size_t v = 0;
    for (Elem c : f.elements()) {
      const auto rp = root_profile(f, family_poly(spec, b, f.neg(c)));
      N[c.v] = rp.distinct_count;
      v += N[c.v] > 0;
      std::vector<unsigned> mults;
      for (auto [root, m] : rp.multiplicity) mults.push_back(m);
      T[c.v] = multiset_tuple_counts(mults, d);
    }
    n.sum_v += static_cast<unsigned long>(v);
    n.sum_v2 += static_cast<unsigned long>(v * v);
    for (std::size_t r = 1; r <= d; ++r) {
      BigInt g = 0;
      for (std::uint32_t c = 0; c < f.q(); ++c) {
        n.chi[r] += binomial(BigInt(static_cast<unsigned long>(N[c])), r);
        n.open_r[r] += falling(N[c], r);
        g += big_from_u128(T[c][r]);
      }
      n.closed_r[r] += g;
    }
    for (std::size_t m = 1; m <= d; ++m)
      for (std::size_t k = 1; k <= d; ++k) {
        BigInt gm = 0, gk = 0;
        for (std::uint32_t c1 = 0; c1 < f.q(); ++c1) {
          gm += big_from_u128(T[c1][m]);
          gk += big_from_u128(T[c1][k]);
          for (std::uint32_t c2 = 0; c2 < f.q(); ++c2)
            if (c1 != c2)
              n.smn[m][k] += binomial(BigInt(static_cast<unsigned long>(N[c1])), m) *
                             binomial(BigInt(static_cast<unsigned long>(N[c2])), k);
        }
        n.closed_mn[m][k] += gm * gk;
      }
  });
  return n;
}

}  // namespace

TEST_CASE("family_poly coefficient layout") {
  const auto spec = fam(5, 1, 3, 1, {1});
  const UniPoly f = family_poly(spec, {Elem{2}}, Elem{3});
  CHECK(to_text(f) == "3,2,1,1");
  const auto spec0 = fam(7, 1, 4, 0, {});
  CHECK(family_poly(spec0, {Elem{0}, Elem{0}, Elem{0}}, Elem{0}) == UniPoly::monomial(4, Elem{1}));
  try {
    family_poly(spec, {Elem{1}, Elem{2}}, Elem{0});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::length_mismatch);
  }
  CHECK(spec.key() == "q=5^1/0,1;d=3;s=1;a=1");
  CHECK_THROWS_AS(fam(5, 1, 4, 3, {1, 1, 1}), Error);
  CHECK_THROWS_AS(fam(5, 1, 4, 1, {}), Error);
  CHECK(fam(3, 1, 4, 1, {1}).small_field);
  CHECK_THROWS_AS(FamilySpec::make(Field::make(3, 1), 4, 1, {Elem{1}}, SmallFieldPolicy::error), Error);
}

TEST_CASE("value_profile") {
  const auto sq = fam(7, 1, 2, 0, {});
  const auto vp = value_profile(sq, {Elem{0}});
  CHECK(vp.counts == std::vector<std::uint32_t>{1, 2, 2, 0, 2, 0, 0});
  CHECK(vp.distinct() == 4);

  const auto spec = fam(3, 2, 4, 1, {5});
  enumerate_b(spec, [&](const std::vector<Elem>& b) {
    const auto p = value_profile(spec, b);
    std::uint32_t total = 0;
    for (auto c : p.counts) {
      total += c;
      CHECK(c <= spec.d);
    }
    CHECK(total == 9);
    const auto vals = batch_eval(*spec.field, family_poly(spec, b, Elem{0}));
    for (std::uint32_t c = 0; c < 9; ++c)
      CHECK(p.counts[c] == std::count(vals.begin(), vals.end(), Elem{c}));
  });
}

TEST_CASE("enumerate_b order and chunking") {
  const auto one = fam(5, 1, 3, 1, {0});
  std::vector<std::vector<Elem>> seen;
  enumerate_b(one, [&](const auto& b) { seen.push_back(b); });
  CHECK(seen.size() == 5);

  const auto spec = fam(5, 1, 4, 1, {2});
  std::vector<std::vector<Elem>> all;
  enumerate_b(spec, [&](const auto& b) { all.push_back(b); });
  REQUIRE(all.size() == 25);
  CHECK(all.front() == std::vector<Elem>{Elem{0}, Elem{0}});
  CHECK(all[1] == std::vector<Elem>{Elem{0}, Elem{1}});
  CHECK(all.back() == std::vector<Elem>{Elem{4}, Elem{4}});
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (std::size_t parts : {1u, 3u, 7u, 40u}) {
    std::vector<std::vector<Elem>> chunked;
    for (auto [lo, hi] : split_range(spec.b_count(), parts))
      enumerate_b(spec, lo, hi, [&](const auto& b) { chunked.push_back(b); });
    CHECK(chunked == all);
  }
  CHECK(b_at(spec, 7) == std::vector<Elem>{Elem{1}, Elem{2}});
}

TEST_CASE("scan totals agree with a per-value root-profile oracle") {
  for (const auto& spec : {fam(5, 1, 3, 1, {0}), fam(5, 1, 4, 1, {3}), fam(5, 1, 5, 2, {0, 0}), fam(7, 1, 4, 1, {1}),
                           fam(3, 2, 4, 1, {4}), fam(3, 1, 4, 0, {}), fam(5, 1, 5, 0, {})}) {
    CAPTURE(spec.key());
    const auto t = scan_family(spec);
    const auto n = naive(spec);
    CHECK(t.profiles == spec.b_count());
    CHECK(big_from_u128(t.sum_v) == n.sum_v);
    CHECK(big_from_u128(t.sum_v2) == n.sum_v2);
    for (std::size_t r = 1; r <= spec.d; ++r) {
      CHECK(scan_chi(t, r) == n.chi[r]);
      CHECK(scan_gamma_open_r(t, r) == n.open_r[r]);
      CHECK(scan_gamma_closed_r(t, r) == n.closed_r[r]);
      for (std::size_t m = 1; m <= spec.d; ++m) {
        CHECK(scan_smn(t, r, m) == n.smn[r][m]);
        CHECK(scan_gamma_closed_mn(t, r, m) == n.closed_mn[r][m]);
      }
    }
  }
}

TEST_CASE("scan is invariant under worker count") {
  const auto spec = fam(7, 1, 5, 1, {2});
  const auto one = scan_family(spec, {1, 0});
  CHECK(scan_family(spec, {3, 0}) == one);
  CHECK(scan_family(spec, {8, 0}) == one);
  CHECK_THROWS_AS(scan_family(spec, {1, 100}), Error);
}

TEST_CASE("multiset tuple counts") {
  // roots {x, x, y}: ordered pairs xx, xy, yx
  const auto c = multiset_tuple_counts({2, 1}, 4);
  CHECK(c[0] == 1);
  CHECK(c[1] == 2);
  CHECK(c[2] == 3);
  CHECK(c[3] == 3);
  CHECK(c[4] == 0);
  // all simple: falling factorial
  const auto s = multiset_tuple_counts({1, 1, 1, 1}, 4);
  CHECK(s[2] == 12);
  CHECK(s[4] == 24);
}
