#include "vslab/bounds.hpp"

#include <cmath>

#include "vslab/error.hpp"
#include "vslab/moments.hpp"

namespace vslab {

BigInt BoundParams::D_r(std::size_t d, std::size_t r) {
  return BigInt(static_cast<unsigned long>(r * d)) - BigInt(static_cast<unsigned long>(r * (r + 1) / 2));
}

BigInt BoundParams::delta_r(std::size_t d, std::size_t r) {
  if (r > d) return 0;
  return factorial(d) / factorial(d - r);
}

BigInt BoundParams::D_mn(std::size_t d, std::size_t m, std::size_t n) {
  return BigInt(static_cast<unsigned long>((m + n) * d)) - BigInt(static_cast<unsigned long>(m * (m + 1) / 2)) -
         BigInt(static_cast<unsigned long>(n * (n + 1) / 2));
}

BigInt BoundParams::delta_mn(std::size_t d, std::size_t m, std::size_t n) {
  if (m > d || n > d) return 0;
  return factorial(d) * factorial(d) / (factorial(d - m) * factorial(d - n));
}

BigInt BoundParams::xi_mn(std::size_t m, std::size_t n) {
  return BigInt(static_cast<unsigned long>(m * (m - 1) / 2 + n * (n - 1) / 2 + 1));
}

double BoundParams::k0(std::size_t d) { return -0.5 + std::sqrt(5.0 + 4.0 * static_cast<double>(d)) / 2.0; }

std::size_t BoundParams::floor_k0(std::size_t d) {
  // largest k with 2k + 1 <= sqrt(5 + 4d)
  std::size_t k = 0;
  while ((2 * (k + 1) + 1) * (2 * (k + 1) + 1) <= 5 + 4 * d) ++k;
  return k;
}

BigInt BoundParams::h(std::size_t d, std::size_t k) {
  const BigInt c = binomial(BigInt(static_cast<unsigned long>(d)), k);
  return c * c * factorial(d - k);
}

Applicability applicability(std::uint64_t q, std::size_t d, std::size_t s, std::uint64_t p) {
  Applicability a;
  if (p < 3 || p % 2 == 0 || q <= d) return a;
  const bool p3 = p == 3;
  auto s_at_most = [&](std::size_t gap) { return s >= 1 && d >= gap + 1 && s <= d - gap; };
  a.mean_main = a.v2 = a.smn = s_at_most(p3 ? 6 : 4);
  a.mean_refined = a.chi = s_at_most(p3 ? 6 : 3);
  a.v2_s0 = a.smn_s0 = s == 0 && d >= (p3 ? 9u : 5u);
  return a;
}

std::string kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::mean_main: return "mean_main";
    case BoundKind::mean_refined: return "mean_refined";
    case BoundKind::chi: return "chi";
    case BoundKind::gamma_star: return "gamma_star";
    case BoundKind::smn: return "smn";
    case BoundKind::smn_s0: return "smn_s0";
    case BoundKind::v2: return "v2";
    case BoundKind::v2_s0: return "v2_s0";
  }
  return "?";
}

namespace {

// num/den * q^qexp * e^eexp
struct Term {
  BigInt num;
  BigInt den;
  double qexp;
  double eexp;
};

double log_big(const BigInt& x) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double evaluate(const std::vector<Term>& terms, double q, bool log_space) {
  double total = 0;
  for (const auto& t : terms) {
    if (log_space && t.num > 0)
      total += std::exp(log_big(t.num) - log_big(t.den) + t.qexp * std::log(q) + t.eexp);
    else
      total += t.num.get_d() / t.den.get_d() * std::pow(q, t.qexp) * std::exp(t.eexp);
  }
  return total;
}

std::size_t need(const std::optional<std::size_t>& v, const char* name) {
  if (!v) throw Error(Errc::missing_parameter, std::string("bound needs ") + name);
  if (*v == 0) throw Error(Errc::invalid_argument, std::string(name) + " must be >= 1");
  return *v;
}

BigInt ul(std::size_t x) { return BigInt(static_cast<unsigned long>(x)); }

}  // namespace

double bound_value(BoundKind kind, const BoundArgs& args) {
  const std::size_t d = args.d, s = args.s;
  const double q = static_cast<double>(args.q);
  const double ds = static_cast<double>(d) - static_cast<double>(s);
  const double sd = std::sqrt(static_cast<double>(d));
  const double dd = static_cast<double>(d);
  const BigInt D = ul(d), one = 1;
  std::vector<Term> terms;
  switch (kind) {
    case BoundKind::mean_main:
      terms = {{D * D * ipow(2, d - 1), one, 0.5, 0}, {49 * ipow(D, d + 5), one, 0, 2 * sd - dd}};
      break;
    case BoundKind::mean_refined: {
      BigInt sum = 0;
      for (std::size_t k = 0; k < s; ++k) sum += BoundParams::h(d, k);
      terms = {{D * D * ipow(2, d - 1), one, 0.5, 0}, {7 * ipow(D, 4) * sum, 2, 0, 0}};
      break;
    }
    case BoundKind::chi: {
      const std::size_t r = need(args.r, "r");
      const BigInt Dr = BoundParams::D_r(d, r), dr = BoundParams::delta_r(d, r), rf = factorial(r);
      terms = {{dr * (Dr - 2) + 2, rf, ds - 0.5, 0},
               {2 * 14 * Dr * Dr * dr * dr + ul(r * (r - 1)) * dr, 2 * rf, ds - 1, 0}};
      break;
    }
    case BoundKind::gamma_star: {
      const std::size_t r = need(args.r, "r");
      const BigInt Dr = BoundParams::D_r(d, r), dr = BoundParams::delta_r(d, r);
      terms = {{dr * (Dr - 2) + 2, one, ds - 0.5, 0}, {14 * Dr * Dr * dr * dr, one, ds - 1, 0}};
      break;
    }
    case BoundKind::smn: {
      const std::size_t m = need(args.m, "m"), n = need(args.n, "n");
      const BigInt Dm = BoundParams::D_mn(d, m, n), dm = BoundParams::delta_mn(d, m, n), xi = BoundParams::xi_mn(m, n);
      const BigInt f = factorial(m) * factorial(n);
      terms = {{dm * (Dm - 2) + 2, f, ds + 0.5, 0}, {14 * Dm * Dm * dm * dm + xi * dm, f, ds, 0}};
      break;
    }
    case BoundKind::smn_s0: {
      const std::size_t m = need(args.m, "m"), n = need(args.n, "n");
      const BigInt Dm = BoundParams::D_mn(d, m, n), dm = BoundParams::delta_mn(d, m, n), xi = BoundParams::xi_mn(m, n);
      terms = {{14 * Dm * Dm * Dm * dm * dm + xi * dm, factorial(m) * factorial(n), dd, 0}};
      break;
    }
    case BoundKind::v2:
      terms = {{D * D * ipow(2, 2 * d + 1), one, 1.5, 0}, {ipow(14, 3) * ipow(D, 2 * d + 6), one, 1, 4 * sd - 2 * dd}};
      break;
    case BoundKind::v2_s0:
      terms = {{D * D * ipow(2, 2 * d - 2), one, 1, 0}, {ipow(14, 3) * ipow(D, 2 * d + 8), one, 1, 4 * sd - 2 * dd}};
      break;
  }
  return evaluate(terms, q, d > 20);
}

bool within(const BigRational& lhs, double rhs) {
  if (std::isinf(rhs) && rhs > 0) return true;
  if (std::isnan(rhs)) return false;
  BigRational bound(rhs);
  bound *= BigRational(1'000'000'001, 1'000'000'000);
  return lhs <= bound;
}

namespace {

BigRational abs_diff(const BigRational& a, const BigRational& b) {
  BigRational r = a - b;
  return r < 0 ? BigRational(-r) : r;
}

BigRational power_over(std::uint64_t q, std::size_t e, const BigInt& den) {
  BigRational r(ipow(BigInt(static_cast<unsigned long>(q)), e), den);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<BoundCheck> bound_suite(const FamilySpec& spec, const ScanTotals& t) {
  const std::uint64_t q = spec.field->q(), p = spec.field->p();
  const std::size_t d = spec.d, s = spec.s;
  const Applicability app = applicability(q, d, s, p);
  std::vector<BoundCheck> out;
  auto emit = [&](BoundKind kind, bool applicable, BigRational lhs, std::optional<std::size_t> r = {},
                  std::optional<std::size_t> m = {}, std::optional<std::size_t> n = {}) {
    BoundCheck c{kind, {q, d, s, r, m, n}, std::move(lhs), 0, applicable, std::nullopt};
    c.rhs = bound_value(kind, c.args);
    if (applicable) c.pass = within(c.lhs, c.rhs);
    out.push_back(std::move(c));
  };
  const BigRational mean = scan_mean(spec, t), second = scan_second_moment(spec, t);
  const BigRational m = mu(d), bq(static_cast<unsigned long>(q));
  const BigRational mean_dev = abs_diff(mean, m * bq), second_dev = abs_diff(second, m * m * bq * bq);

  if (s >= 1) {
    emit(BoundKind::mean_main, app.mean_main, mean_dev);
    emit(BoundKind::mean_refined, app.mean_refined, mean_dev);
    emit(BoundKind::v2, app.v2, second_dev);
    for (std::size_t r = d - s + 1; r <= d; ++r) {
      emit(BoundKind::chi, app.chi, abs_diff(BigRational(scan_chi(t, r)), power_over(q, d - s, factorial(r))), r);
      emit(BoundKind::gamma_star, app.chi, abs_diff(BigRational(scan_gamma_closed_r(t, r)), power_over(q, d - s, 1)), r);
    }
    for (std::size_t mm = 1; mm <= d; ++mm)
      for (std::size_t nn = 1; nn <= d; ++nn)
        if (mm + nn >= d - s + 1)
          emit(BoundKind::smn, app.smn,
               abs_diff(BigRational(scan_smn(t, mm, nn)), power_over(q, d - s + 1, factorial(mm) * factorial(nn))),
               std::nullopt, mm, nn);
  } else {
    emit(BoundKind::v2_s0, app.v2_s0, second_dev);
    for (std::size_t mm = 1; mm <= d; ++mm)
      for (std::size_t nn = 1; nn <= d; ++nn)
        if (mm + nn >= d + 1)
          emit(BoundKind::smn_s0, app.smn_s0,
               abs_diff(BigRational(scan_smn(t, mm, nn)), power_over(q, d + 1, factorial(mm) * factorial(nn))),
               std::nullopt, mm, nn);
  }
  return out;
}

UnimodalityReport unimodality_audit(std::size_t d) {
  if (d < 2) throw Error(Errc::invalid_argument, "unimodality audit needs d >= 2");
  UnimodalityReport rep;
  rep.d = d;
  rep.k0 = BoundParams::k0(d);
  rep.floor_k0 = BoundParams::floor_k0(d);
  for (std::size_t k = 0; k < d; ++k) rep.h.push_back(BoundParams::h(d, k));
  BigInt best = rep.h[0];
  for (const auto& x : rep.h)
    if (x > best) best = x;
  for (std::size_t k = 0; k < d; ++k)
    if (rep.h[k] == best) rep.argmax.push_back(k);
  std::size_t i = 0;
  while (i + 1 < d && rep.h[i] <= rep.h[i + 1]) ++i;
  if (i + 1 == d) {
    rep.shape = Shape::increasing;
  } else {
    while (i + 1 < d && rep.h[i] >= rep.h[i + 1]) ++i;
    rep.shape = i + 1 == d ? Shape::unimodal : Shape::neither;
  }
  rep.floor_k0_is_max = rep.floor_k0 < d && rep.h[rep.floor_k0] == best;
  return rep;
}

}  // namespace vslab
