#include <doctest.h>

#include "vslab/error.hpp"
#include "vslab/moments.hpp"

using namespace vslab;

namespace {

FamilySpec fam(std::uint32_t p, std::size_t d, std::size_t s, std::vector<std::uint32_t> a, std::uint32_t k = 1) {
  std::vector<Elem> ae;
  for (auto x : a) ae.push_back(Elem{x});
  return FamilySpec::make(Field::make(p, k), d, s, ae);
}

BigRational Q(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("mu values") {
  CHECK(mu(1) == 1);
  CHECK(mu(2) == Q(1, 2));
  CHECK(mu(5) == Q(19, 30));
}

TEST_CASE("cohen_exact_mean values") {
  CHECK(cohen_exact_mean(7, 2) == 4);
  CHECK(cohen_exact_mean(5, 3) == Q(17, 5));
  CHECK(cohen_exact_mean(11, 1) == 11);
}

TEST_CASE("value set mean and second moment") {
  const auto sq = fam(7, 2, 0, {});
  CHECK(value_set_mean(sq) == 4);
  CHECK(value_set_second_moment(sq) == 16);
  CHECK(value_set_mean(fam(5, 3, 0, {})) == cohen_exact_mean(5, 3));
  CHECK(value_set_mean(fam(7, 4, 0, {})) == cohen_exact_mean(7, 4));
  for (const auto& spec : {fam(5, 4, 1, {2}), fam(3, 4, 1, {1}, 2), fam(7, 4, 2, {1, 2})}) {
    const auto mean = value_set_mean(spec), second = value_set_second_moment(spec);
    CHECK(second >= mean * mean);
    CHECK(second <= BigRational(spec.field->q() * spec.field->q()));
    CHECK(mean >= 1);
    CHECK(mean <= spec.field->q());
    const auto t = scan_family(spec);
    CHECK(scan_mean(spec, t) == mean);
    CHECK(scan_second_moment(spec, t) == second);
  }
}

TEST_CASE("mean reconstruction from chi") {
  for (const auto& spec : {fam(7, 4, 1, {1}), fam(7, 4, 2, {1, 2}), fam(5, 5, 3, {1, 0, 4})}) {
    const auto t = scan_family(spec);
    CHECK(reconstruct_mean(spec, chi_vector(t, spec.d - spec.s + 1, spec.d)) == value_set_mean(spec));
  }
  const auto s0 = fam(5, 4, 0, {});
  try {
    reconstruct_mean(s0, {});
    FAIL("expected RegimeViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::regime_violation);
  }
  try {
    reconstruct_mean(fam(7, 4, 1, {1}), ChiVector{});
    FAIL("expected RangeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::range_mismatch);
  }
}

TEST_CASE("second moment reconstruction") {
  for (const auto& spec : {fam(5, 4, 1, {0}), fam(5, 4, 1, {3}), fam(5, 4, 0, {}), fam(7, 4, 2, {1, 2})}) {
    CAPTURE(spec.key());
    const auto t = scan_family(spec);
    const auto mean = value_set_mean(spec);
    const auto exact = reconstruct_second_moment(spec, mean, s_matrix(t, 2, 2 * spec.d), SecondMomentMode::exact);
    CHECK(exact == value_set_second_moment(spec));
    // paper mode only needs the high range
    CHECK_NOTHROW(reconstruct_second_moment(spec, mean, s_matrix(t, spec.d - spec.s + 1, 2 * spec.d),
                                            SecondMomentMode::paper));
    CHECK_THROWS_AS(reconstruct_second_moment(spec, mean, s_matrix(t, spec.d - spec.s + 1, 2 * spec.d),
                                              SecondMomentMode::exact),
                    Error);
  }
}

TEST_CASE("moment_report fields are consistent") {
  const auto spec = fam(5, 4, 1, {1});
  const auto r = moment_report(spec, scan_family(spec));
  CHECK(r.key == spec.key());
  REQUIRE(r.reconstructed_mean);
  CHECK(*r.reconstructed_mean == r.mean);
  CHECK(r.reconstructed_exact == r.second_moment);
  CHECK(r.mean_residual == r.mean - mu(4) * 5);
  CHECK(r.paper_residual == r.reconstructed_paper - r.reconstructed_exact);
  CHECK(r.chi.size() == 1);
}
