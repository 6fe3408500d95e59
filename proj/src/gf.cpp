#include "vslab/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "vslab/error.hpp"

namespace vslab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::non_monic: return "NonMonic";
    case Errc::degree_too_small: return "DegreeTooSmall";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::degenerate_leading_coefficient: return "DegenerateLeadingCoefficient";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::regime_violation: return "RegimeViolation";
    case Errc::range_mismatch: return "RangeMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_unique_regime: return "NotUniqueRegime";
    case Errc::overlapping_subsets: return "OverlappingSubsets";
    case Errc::not_on_variety: return "NotOnVariety";
    case Errc::missing_parameter: return "MissingParameter";
    case Errc::degenerate_case: return "DegenerateCase";
    case Errc::case_mismatch: return "CaseMismatch";
    case Errc::schema_mismatch: return "SchemaMismatch";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace {

using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
PolyP rem_monic(PolyP a, const PolyP& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t t = (lead * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> f) {
  PolyP poly(f.begin(), f.end());
  trim(poly);
  if (poly.size() < 2) return false;
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  // Walk every monic divisor candidate of degree 1..deg/2 by its index.
  for (std::size_t e = 1; e <= deg / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PolyP g(e + 1);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[e] = 1;
      if (rem_monic(poly, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k,
                                         std::vector<std::uint32_t> modulus) {
  if (p == 2 || !is_prime(p))
    throw Error(Errc::even_characteristic, "characteristic must be an odd prime, got " + std::to_string(p));
  if (k < 1) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1ull << 31)) throw Error(Errc::invalid_argument, "field too large");
  }

  if (modulus.empty()) {
    // Lowest canonical index of the lower coefficients first.
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      PolyP cand(k + 1);
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < k; ++i) {
        cand[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      cand[k] = 1;
      if (is_irreducible_mod_p(p, cand)) {
        modulus = std::move(cand);
        break;
      }
    }
  } else {
    if (modulus.size() != k + 1 || modulus.back() != 1)
      throw Error(Errc::invalid_argument, "modulus must be monic of degree k");
    for (auto c : modulus)
      if (c >= p) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
    if (!is_irreducible_mod_p(p, modulus)) throw Error(Errc::reducible_modulus, "modulus is reducible");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);
  f->modulus_ = std::move(modulus);
  if (f->q_ <= kTableLimit) f->build_tables();
  return f;
}

std::shared_ptr<const Field> Field::parse(const std::string& descriptor) {
  auto fail = [&] { throw Error(Errc::parse_error, "bad field descriptor '" + descriptor + "'"); };
  const auto caret = descriptor.find('^');
  if (caret == std::string::npos) fail();
  const auto slash = descriptor.find('/');
  auto to_u32 = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail();
    return v;
  };
  std::string_view sv(descriptor);
  const std::uint32_t p = to_u32(sv.substr(0, caret));
  const std::uint32_t k =
      to_u32(sv.substr(caret + 1, slash == std::string::npos ? std::string::npos : slash - caret - 1));
  std::vector<std::uint32_t> modulus;
  if (slash != std::string::npos) {
    std::string_view rest = sv.substr(slash + 1);
    while (true) {
      const auto comma = rest.find(',');
      modulus.push_back(to_u32(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return make(p, k, std::move(modulus));
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << p_ << '^' << k_ << '/';
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

Elem Field::from_index(std::uint32_t index) const {
  if (index >= q_) throw Error(Errc::invalid_argument, "element index out of range");
  return Elem{index};
}

Elem Field::from_int(long long n) const noexcept {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> c(k_);
  std::uint32_t t = x.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = t % p_;
    t /= p_;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return Elem{v};
}

Elem Field::add_slow(Elem x, Elem y) const noexcept {
  std::uint32_t a = x.v, b = y.v, r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return Elem{r};
}

Elem Field::neg_slow(Elem x) const noexcept {
  std::uint32_t a = x.v, r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return Elem{r};
}

Elem Field::mul_slow(Elem x, Elem y) const noexcept {
  const auto a = coeffs(x), b = coeffs(y);
  PolyP prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p_);
  const PolyP r = rem_monic(std::move(prod), modulus_, p_);
  return from_coeffs(r);
}

Elem Field::inv(Elem x) const {
  if (x.v == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  if (has_tables()) return Elem{inv_[x.v]};
  return pow(x, std::uint64_t(q_) - 2);
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
  if (k_ == 1) return Elem{static_cast<std::uint32_t>(modpow(x.v, e, p_))};
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
  return out;
}

void Field::build_tables() {
  const std::size_t n = std::size_t(q_) * q_;
  add_.resize(n);
  mul_.resize(n);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    neg_[x] = static_cast<std::uint16_t>(neg_slow(Elem{x}).v);
    for (std::uint32_t y = 0; y < q_; ++y) {
      add_[std::size_t(x) * q_ + y] = static_cast<std::uint16_t>(add_slow(Elem{x}, Elem{y}).v);
      mul_[std::size_t(x) * q_ + y] = static_cast<std::uint16_t>(mul_slow(Elem{x}, Elem{y}).v);
    }
  }
  for (std::uint32_t x = 1; x < q_; ++x)
    for (std::uint32_t y = 1; y < q_; ++y)
      if (mul_[std::size_t(x) * q_ + y] == 1) {
        inv_[x] = static_cast<std::uint16_t>(y);
        break;
      }
}

}  // namespace vslab
