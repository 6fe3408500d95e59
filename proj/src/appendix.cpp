#include "vslab/appendix.hpp"

#include <algorithm>

#include "vslab/error.hpp"
#include "vslab/gf.hpp"

namespace vslab {

std::vector<std::string> GenericFamily::names() const {
  std::vector<std::string> n;
  for (std::size_t i : free) n.push_back("B" + std::to_string(i));
  return n;
}

std::optional<std::size_t> GenericFamily::var(std::size_t i) const {
  auto it = std::find(free.begin(), free.end(), i);
  if (it == free.end()) return std::nullopt;
  return static_cast<std::size_t>(it - free.begin());
}

GenericFamily generic_family(std::uint32_t p, std::size_t d, std::vector<std::size_t> free) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::even_characteristic, "p must be an odd prime");
  std::sort(free.begin(), free.end());
  free.erase(std::unique(free.begin(), free.end()), free.end());
  if (free.empty() || free.front() != 0) throw Error(Errc::invalid_argument, "B0 must be free");
  if (free.back() >= d) throw Error(Errc::invalid_argument, "free indices must be below d");
  GenericFamily g;
  g.p = p;
  g.d = d;
  g.free = free;
  const std::size_t n = free.size();
  g.F.assign(d + 1, MultiPoly(p, n));
  g.F[d] = MultiPoly::constant(p, n, 1);
  for (std::size_t j = 0; j < n; ++j) g.F[free[j]] = MultiPoly::variable(p, n, j);
  for (std::size_t i = 1; i <= d; ++i) g.dF.push_back(scale(g.F[i], static_cast<std::uint32_t>(i % p)));
  while (!g.dF.empty() && g.dF.back().is_zero()) g.dF.pop_back();
  if (g.dF.size() < 2) throw Error(Errc::degenerate_case, "dF/dT has T-degree < 1");
  return g;
}

MultiPoly generic_disc(const GenericFamily& g) {
  const MultiPoly res = symbolic_resultant(g.F, g.dF);
  return (g.d * (g.d - 1) / 2) % 2 ? -res : res;
}

MultiPoly generic_disc(std::uint32_t p, std::size_t d, const std::vector<std::size_t>& free) {
  return generic_disc(generic_family(p, d, free));
}

std::string case_name(AppendixCase c) {
  switch (c) {
    case AppendixCase::coprime: return "p∤d(d-1)";
    case AppendixCase::p_divides_d: return "p|d";
    case AppendixCase::p_divides_d_minus_1_even: return "p|(d-1)-even";
    case AppendixCase::p_divides_d_minus_1_odd: return "p|(d-1)-odd";
  }
  return "?";
}

std::string match_name(Match m) {
  switch (m) {
    case Match::exact: return "exact";
    case Match::up_to_sign: return "up_to_sign";
    case Match::up_to_scalar: return "up_to_scalar";
    case Match::failed: return "failed";
  }
  return "?";
}

AppendixCase select_case(std::uint32_t p, std::size_t d) {
  if (d % p == 0) return AppendixCase::p_divides_d;
  if ((d - 1) % p == 0) return d % 2 == 0 ? AppendixCase::p_divides_d_minus_1_even : AppendixCase::p_divides_d_minus_1_odd;
  return AppendixCase::coprime;
}

bool has_weight(const MultiPoly& f, const GenericFamily& g, std::uint64_t weight) {
  WeightSystem ws;
  for (std::size_t i : g.free) ws.w.push_back(g.d - i);
  for (const auto& [e, c] : f.terms())
    if (ws.weight(e) != weight) return false;
  return true;
}

namespace {

// c * B0^e0 * B1^e1 * B2^e2 in a family whose free set contains those indices.
MultiPoly mono(const GenericFamily& g, long long c, std::size_t e0, std::size_t e1, std::size_t e2 = 0) {
  Exponents e(g.free.size(), 0);
  const std::size_t exps[3] = {e0, e1, e2};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!exps[i]) continue;
    auto v = g.var(i);
    if (!v) throw Error(Errc::invalid_argument, "monomial uses a variable that is not free");
    e[*v] = static_cast<std::uint32_t>(exps[i]);
  }
  return MultiPoly::monomial(g.p, e, c);
}

long long ipow_ll(long long b, std::size_t e) {
  long long r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// b^e mod p, with b possibly negative.
long long powmod(long long b, std::size_t e, std::uint32_t p) {
  long long r = 1, x = ((b % p) + p) % p;
  for (std::size_t i = 0; i < e; ++i) r = r * x % p;
  return r;
}

Match classify(const MultiPoly& computed, const MultiPoly& target, std::uint32_t& scalar) {
  scalar = scalar_ratio(computed, target);
  if (scalar == 0) return Match::failed;
  if (scalar == 1) return Match::exact;
  if (scalar == computed.p() - 1) return Match::up_to_sign;
  return Match::up_to_scalar;
}

void check_small(std::uint32_t p, std::size_t d) {
  if (d < 3 || d > 8) throw Error(Errc::invalid_argument, "symbolic checks need 3 <= d <= 8");
  if (p < 3 || !is_prime(p)) throw Error(Errc::even_characteristic, "p must be an odd prime");
}

}  // namespace

AppendixReport appendix_case_check(std::uint32_t p, std::size_t d, std::optional<AppendixCase> expected) {
  check_small(p, d);
  AppendixReport rep;
  rep.check = "case";
  rep.p = p;
  rep.d = d;
  rep.tag = select_case(p, d);
  if (expected && *expected != rep.tag)
    throw Error(Errc::case_mismatch, "(p,d) selects " + case_name(rep.tag) + ", not " + case_name(*expected));

  const bool coprime = rep.tag == AppendixCase::coprime;
  const GenericFamily g = generic_family(p, d, coprime ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0, 1, 2});
  rep.names = g.names();
  const MultiPoly disc = generic_disc(g);
  rep.deg_b0 = disc.degree_in(0);
  rep.weighted_homogeneous = has_weight(disc, g, d * (d - 1));
  const long long sgn_d = d % 2 ? -1 : 1;  // (-1)^d
  switch (rep.tag) {
    case AppendixCase::coprime: {
      // Highest component under wt(B0) = d, wt(B1) = d - 1.
      const auto parts = weight_decompose(disc, WeightSystem{{d, d - 1}});
      rep.computed = parts.empty() ? disc : parts.rbegin()->second;
      rep.target = mono(g, powmod(static_cast<long long>(d), d, p), d - 1, 0) +
                   mono(g, -sgn_d * powmod(static_cast<long long>(d - 1), d - 1, p), 0, d);
      break;
    }
    case AppendixCase::p_divides_d:
      rep.computed = disc;
      rep.target = mono(g, 1, 0, d) + mono(g, -sgn_d * powmod(2, d - 2, p), 0, 2, d - 1) +
                   mono(g, sgn_d * powmod(2, d, p), 1, 0, d);
      break;
    case AppendixCase::p_divides_d_minus_1_even:
      rep.computed = disc;
      rep.target = mono(g, 4, 1, 0, d) + mono(g, 1, d - 1, 0) + mono(g, 4, d / 2, 0, d / 2) + mono(g, -1, 0, 2, d - 1);
      break;
    case AppendixCase::p_divides_d_minus_1_odd:
      rep.computed = disc;
      rep.target = mono(g, -4, 1, 0, d) + mono(g, 1, d - 1, 0) + mono(g, 2, (d - 1) / 2, 0, (d - 1) / 2) +
                   mono(g, -1, 0, 2, d - 1);
      break;
  }
  rep.matched = classify(rep.computed, rep.target, rep.scalar);
  return rep;
}

AppendixReport subres1_terms_check(std::uint32_t p, std::size_t d) {
  check_small(p, d);
  AppendixReport rep;
  rep.check = "subres1";
  rep.p = p;
  rep.d = d;
  rep.tag = select_case(p, d);
  const GenericFamily g = generic_family(p, d, {0, 1, 2});
  rep.names = g.names();
  const MultiPoly res = symbolic_resultant(g.F, g.dF);
  rep.deg_b0 = res.degree_in(0);
  rep.weighted_homogeneous = has_weight(res, g, d * (d - 1));
  // On the diagonal the first divided difference of F is F'.
  rep.computed = symbolic_subres1(g.F, g.dF);
  const bool coprime = (d % p != 0) && ((d - 1) % p != 0);
  if (coprime) {
    // d (d-1)^{d-2} B1^{d-2}
    rep.target = mono(g, static_cast<long long>(d % p) * powmod(static_cast<long long>(d - 1), d - 2, p), 0, d - 2);
  } else {
    // 2 (-1)^d (d-2)^{d-2} B2^{d-1}
    rep.target = mono(g, 2 * ipow_ll(-1, d) * powmod(static_cast<long long>(d - 2), d - 2, p), 0, 0, d - 1);
  }
  rep.matched = Match::failed;
  if (!rep.computed.is_zero() && !rep.target.is_zero()) {
    const auto& [e, want] = *rep.target.terms().begin();
    const std::uint32_t got = rep.computed.coeff(e);
    if (got == want) {
      rep.matched = Match::exact;
      rep.scalar = 1;
    } else if (got != 0 && got == p - want) {
      rep.matched = Match::up_to_sign;
      rep.scalar = p - 1;
    }
  }
  return rep;
}

}  // namespace vslab
