#include <doctest.h>

#include <random>
#include <set>

#include "vslab/error.hpp"
#include "vslab/gf.hpp"

using namespace vslab;

TEST_CASE("make_field validates characteristic and modulus") {
  auto f7 = Field::make(7, 1);
  CHECK(f7->q() == 7);
  auto f9 = Field::make(3, 2, {1, 0, 1});
  CHECK(f9->q() == 9);
  CHECK(f9->descriptor() == "3^2/1,0,1");

  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  CHECK(code_of([] { Field::make(2, 1); }) == Errc::even_characteristic);
  CHECK(code_of([] { Field::make(9, 1); }) == Errc::even_characteristic);
  // T^2 + 2 = (T-1)(T+1) over F_3
  CHECK(code_of([] { Field::make(3, 2, {2, 0, 1}); }) == Errc::reducible_modulus);
}

TEST_CASE("modulus search is deterministic and picks the lowest index") {
  auto a = Field::make(3, 2);
  auto b = Field::make(3, 2);
  CHECK(a->modulus() == b->modulus());
  // Candidates by index: T^2, T^2+1 (irreducible, -1 is a non-square mod 3).
  CHECK(a->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::parse("5^2")->q() == 25);
  CHECK(Field::parse("3^2/1,0,1")->descriptor() == "3^2/1,0,1");
}

TEST_CASE("field_arith spot values") {
  auto f7 = Field::make(7, 1);
  CHECK(f7->inv(Elem{3}) == Elem{5});
  CHECK(f7->pow(Elem{2}, 5) == Elem{4});
  auto f9 = Field::make(3, 2, {1, 0, 1});
  const Elem t = f9->from_coeffs(std::vector<std::uint32_t>{0, 1});
  CHECK(f9->mul(t, t) == Elem{2});
  CHECK_THROWS_AS(f7->inv(Elem{0}), Error);
}

TEST_CASE("enumerate_elements is the canonical bijection") {
  auto f5 = Field::make(5, 1);
  const auto els = f5->elements();
  REQUIRE(els.size() == 5);
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(els[i].v == i);
  auto f9 = Field::make(3, 2);
  std::set<std::uint32_t> seen;
  for (Elem e : f9->elements()) {
    CHECK(f9->from_coeffs(f9->coeffs(e)) == e);
    seen.insert(e.v);
  }
  CHECK(seen.size() == 9);
  CHECK(f9->elements().front() == f9->zero());
}

namespace {

void check_axioms(const Field& f, unsigned samples) {
  std::mt19937 rng(1234 + f.q());
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  for (unsigned i = 0; i < samples; ++i) {
    const Elem x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
    CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
    CHECK(f.add(x, y) == f.add(y, x));
    CHECK(f.mul(x, y) == f.mul(y, x));
    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
    CHECK(f.add(x, f.neg(x)) == f.zero());
    if (x.v != 0) CHECK(f.mul(x, f.inv(x)) == f.one());
  }
  for (Elem x : f.elements()) {
    if (x.v != 0) CHECK(f.pow(x, f.q() - 1) == f.one());
    CHECK(f.pow(x, f.q()) == x);
  }
}

}  // namespace

TEST_CASE("field axioms on tabulated and untabulated fields") {
  check_axioms(*Field::make(5, 1), 200);
  check_axioms(*Field::make(3, 3), 200);
  check_axioms(*Field::make(5, 2), 200);
  auto big = Field::make(3, 8);  // 6561 > table limit
  CHECK_FALSE(big->has_tables());
  check_axioms(*big, 200);
}

namespace {

// Schoolbook product of coefficient vectors reduced by the field's modulus.
Elem reference_mul(const Field& f, Elem x, Elem y) {
  const auto a = f.coeffs(x), b = f.coeffs(y);
  const auto& m = f.modulus();
  const std::size_t k = f.k();
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % f.p();
  for (std::size_t top = 2 * k - 1; top >= k; --top) {
    const std::uint64_t lead = prod[top];
    for (std::size_t i = 0; i <= k; ++i)
      prod[top - k + i] = (prod[top - k + i] + f.p() * f.p() - lead * m[i] % f.p()) % f.p();
  }
  std::vector<std::uint32_t> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return f.from_coeffs(r);
}

}  // namespace

TEST_CASE("multiplication matches a schoolbook reference with and without tables") {
  std::mt19937 rng(99);
  for (auto f : {Field::make(3, 4), Field::make(5, 3), Field::make(3, 8)}) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    for (int i = 0; i < 500; ++i) {
      const Elem x{pick(rng)}, y{pick(rng)};
      CHECK(f->mul(x, y) == reference_mul(*f, x, y));
    }
  }
}
