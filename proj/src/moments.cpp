#include "vslab/moments.hpp"

#include "vslab/error.hpp"

namespace vslab {

namespace {

BigRational sign(std::size_t e) { return e % 2 ? BigRational(-1) : BigRational(1); }

BigRational q_power(const BigInt& q, long e) {
  if (e >= 0) return BigRational(ipow(q, static_cast<unsigned long>(e)));
  return BigRational(BigInt(1), ipow(q, static_cast<unsigned long>(-e)));
}

BigInt bq(const FamilySpec& spec) { return BigInt(spec.field->q()); }

}  // namespace

BigRational mu(std::size_t d) {
  BigRational acc = 0;
  for (std::size_t r = 1; r <= d; ++r) acc += sign(r - 1) / BigRational(factorial(r));
  acc.canonicalize();
  return acc;
}

BigRational cohen_exact_mean(const BigInt& q, std::size_t d) {
  BigRational acc = 0;
  for (std::size_t r = 1; r <= d; ++r) acc += sign(r - 1) * BigRational(binomial(q, r)) * q_power(q, 1 - static_cast<long>(r));
  acc.canonicalize();
  return acc;
}

namespace {

std::pair<BigInt, BigInt> direct_sums(const FamilySpec& spec) {
  BigInt s1 = 0, s2 = 0;
  enumerate_b(spec, [&](const std::vector<Elem>& b) {
    const unsigned long v = value_profile(spec, b).distinct();
    s1 += v;
    s2 += v * v;
  });
  return {s1, s2};
}

}  // namespace

BigRational value_set_mean(const FamilySpec& spec) {
  BigRational r(direct_sums(spec).first, BigInt(std::to_string(spec.b_count())));
  r.canonicalize();
  return r;
}

BigRational value_set_second_moment(const FamilySpec& spec) {
  BigRational r(direct_sums(spec).second, BigInt(std::to_string(spec.b_count())));
  r.canonicalize();
  return r;
}

BigRational scan_mean(const FamilySpec& spec, const ScanTotals& t) {
  BigRational r(big_from_u128(t.sum_v), BigInt(std::to_string(spec.b_count())));
  r.canonicalize();
  return r;
}

BigRational scan_second_moment(const FamilySpec& spec, const ScanTotals& t) {
  BigRational r(big_from_u128(t.sum_v2), BigInt(std::to_string(spec.b_count())));
  r.canonicalize();
  return r;
}

BigRational reconstruct_mean(const FamilySpec& spec, const ChiVector& chi) {
  const std::size_t d = spec.d, s = spec.s;
  if (s < 1 || s + 2 > d) throw Error(Errc::regime_violation, "mean reconstruction needs 1 <= s <= d-2");
  const BigInt q = bq(spec);
  BigRational acc = 0;
  for (std::size_t r = 1; r <= d - s; ++r) acc += sign(r - 1) * BigRational(binomial(q, r)) * q_power(q, 1 - static_cast<long>(r));
  BigRational tail = 0;
  for (std::size_t r = d - s + 1; r <= d; ++r) {
    auto it = chi.find(r);
    if (it == chi.end()) throw Error(Errc::range_mismatch, "chi_" + std::to_string(r) + " missing");
    tail += sign(r - 1) * BigRational(it->second);
  }
  acc += tail * q_power(q, -static_cast<long>(d - s - 1));
  acc.canonicalize();
  return acc;
}

BigRational reconstruct_second_moment(const FamilySpec& spec, const BigRational& mean, const SMatrix& S,
                                      SecondMomentMode mode) {
  const std::size_t d = spec.d, s = spec.s, ds = d - s;
  const BigInt q = bq(spec);
  BigRational acc = mean, tail = 0;
  for (std::size_t m = 1; m <= d; ++m)
    for (std::size_t n = 1; n <= d; ++n) {
      const bool low = m + n <= ds;
      if (low && mode == SecondMomentMode::paper) {
        acc += sign(m + n) * BigRational(binomial(q, m) * binomial(q, n)) * q_power(q, 2 - static_cast<long>(m + n));
        continue;
      }
      auto it = S.find({m, n});
      if (it == S.end())
        throw Error(Errc::range_mismatch, "S_" + std::to_string(m) + "," + std::to_string(n) + " missing");
      tail += sign(m + n) * BigRational(it->second);
    }
  acc += tail * q_power(q, -static_cast<long>(ds - 1));
  acc.canonicalize();
  return acc;
}

MomentReport moment_report(const FamilySpec& spec, const ScanTotals& t) {
  MomentReport r;
  r.key = spec.key();
  r.q = spec.field->q();
  r.d = spec.d;
  r.s = spec.s;
  r.mean = scan_mean(spec, t);
  r.second_moment = scan_second_moment(spec, t);
  r.chi = chi_vector(t, spec.d - spec.s + 1, spec.d);
  r.S = s_matrix(t, 2, 2 * spec.d);
  if (spec.s >= 1) r.reconstructed_mean = reconstruct_mean(spec, r.chi);
  r.reconstructed_exact = reconstruct_second_moment(spec, r.mean, r.S, SecondMomentMode::exact);
  r.reconstructed_paper = reconstruct_second_moment(spec, r.mean, r.S, SecondMomentMode::paper);
  const BigRational m = mu(spec.d), q(bq(spec));
  r.mu_q = m * q;
  r.mean_residual = r.mean - r.mu_q;
  r.mu2_q2 = m * m * q * q;
  r.second_residual = r.second_moment - r.mu2_q2;
  r.paper_residual = r.reconstructed_paper - r.reconstructed_exact;
  return r;
}

}  // namespace vslab
