#include "vslab/upoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "vslab/error.hpp"

namespace vslab {

UniPoly UniPoly::monomial(std::size_t degree, Elem coeff) {
  std::vector<Elem> c(degree + 1, Elem{0});
  c[degree] = coeff;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_roots(const Field& f, std::span<const Elem> roots) {
  std::vector<Elem> c{f.one()};
  for (Elem r : roots) {
    std::vector<Elem> next(c.size() + 1, Elem{0});
    const Elem nr = f.neg(r);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], c[i]);
      next[i] = f.add(next[i], f.mul(nr, c[i]));
    }
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

std::size_t UniPoly::degree() const {
  if (c_.empty()) throw Error(Errc::zero_polynomial, "degree of the zero polynomial");
  return c_.size() - 1;
}

Elem UniPoly::lead() const {
  if (c_.empty()) throw Error(Errc::zero_polynomial, "leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly add(const Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(c));
}

UniPoly sub(const Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(c));
}

UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, Elem{0});
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  return UniPoly(std::move(c));
}

UniPoly scale(const Field& f, const UniPoly& a, Elem s) {
  std::vector<Elem> c(a.coeffs());
  for (auto& x : c) x = f.mul(x, s);
  return UniPoly(std::move(c));
}

UniPoly derivative(const Field& f, const UniPoly& a) {
  if (a.coeffs().size() <= 1) return {};
  std::vector<Elem> c(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = f.mul(f.from_int(static_cast<long long>(i % f.p())), a.coeffs()[i]);
  return UniPoly(std::move(c));
}

DivMod divmod(const Field& f, const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  std::vector<Elem> r = a.coeffs();
  const std::size_t db = b.degree();
  if (r.size() <= db) return {UniPoly{}, a};
  std::vector<Elem> qc(r.size() - db, Elem{0});
  const Elem inv_lead = f.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem t = f.mul(r[i], inv_lead);
    qc[i - db] = t;
    if (t.v == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(t, b.coeffs()[j]));
  }
  r.resize(db);
  return {UniPoly(std::move(qc)), UniPoly(std::move(r))};
}

UniPoly gcd(const Field& f, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(f, a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.lead()));
}

Elem eval(const Field& f, const UniPoly& p, Elem t) noexcept {
  Elem acc{0};
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, t), c[i]);
  return acc;
}

std::vector<Elem> batch_eval(const Field& f, const UniPoly& p) {
  std::vector<Elem> out(f.q());
  for (std::uint32_t i = 0; i < f.q(); ++i) out[i] = eval(f, p, Elem{i});
  return out;
}

namespace {

// Synthetic division by (T - t) in place; returns the remainder p(t).
Elem synthetic_step(const Field& f, std::vector<Elem>& c, Elem t) {
  if (c.empty()) return Elem{0};
  Elem carry{0};
  for (std::size_t i = c.size(); i-- > 0;) {
    const Elem next = f.add(c[i], f.mul(carry, t));
    c[i] = carry;
    carry = next;
  }
  // c[i] now holds the quotient coefficient of T^i; the top slot is spare.
  c.pop_back();
  return carry;
}

}  // namespace

RootProfile root_profile(const Field& f, const UniPoly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "root profile of the zero polynomial");
  RootProfile rp;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const Elem t{i};
    std::vector<Elem> c = p.coeffs();
    unsigned mult = 0;
    while (c.size() > 1) {
      std::vector<Elem> trial = c;
      if (synthetic_step(f, trial, t).v != 0) break;
      c = std::move(trial);
      ++mult;
    }
    if (mult > 0) {
      rp.multiplicity.emplace(t, mult);
      ++rp.distinct_count;
      rp.total_multiplicity += mult;
    }
  }
  return rp;
}

std::vector<Elem> newton_coeffs(const Field& f, const UniPoly& p, std::span<const Elem> nodes) {
  std::vector<Elem> g = p.coeffs();
  std::vector<Elem> out;
  out.reserve(nodes.size());
  for (Elem node : nodes) out.push_back(synthetic_step(f, g, node));
  return out;
}

bool divides(const Field& f, const UniPoly& p, std::span<const Elem> nodes) {
  const auto c = newton_coeffs(f, p, nodes);
  return std::all_of(c.begin(), c.end(), [](Elem x) { return x.v == 0; });
}

Elem determinant(const Field& f, std::vector<std::vector<Elem>> m) {
  const std::size_t n = m.size();
  Elem det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].v == 0) ++piv;
    if (piv == n) return Elem{0};
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    const Elem inv = f.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].v == 0) continue;
      const Elem factor = f.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  return det;
}

Elem principal_subresultant(const Field& f, const UniPoly& a, const UniPoly& b, std::size_t j) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::zero_polynomial, "subresultant with a zero polynomial");
  const std::size_t m = a.degree(), n = b.degree();
  if (j > std::min(m, n)) throw Error(Errc::invalid_argument, "subresultant order exceeds degrees");
  const std::size_t dim = m + n - 2 * j;
  if (dim == 0) return f.one();
  const std::size_t width = m + n - j;
  std::vector<std::vector<Elem>> rows;
  // Coefficients listed from the top power down, each row shifted right once.
  auto push_rows = [&](const UniPoly& p, std::size_t deg, std::size_t count) {
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<Elem> row(width, Elem{0});
      for (std::size_t i = 0; i <= deg; ++i) row[r + i] = p.coeff(deg - i);
      row.resize(dim);
      rows.push_back(std::move(row));
    }
  };
  push_rows(a, m, n - j);
  push_rows(b, n, m - j);
  return determinant(f, std::move(rows));
}

Elem resultant(const Field& f, const UniPoly& a, const UniPoly& b) {
  return principal_subresultant(f, a, b, 0);
}

Elem discriminant(const Field& f, const UniPoly& p) {
  if (p.is_zero() || p.degree() < 2) throw Error(Errc::degree_too_small, "discriminant needs degree >= 2");
  if (p.lead() != f.one()) throw Error(Errc::non_monic, "discriminant needs a monic polynomial");
  const std::size_t d = p.degree();
  const UniPoly dp = derivative(f, p);
  if (dp.is_zero()) return Elem{0};
  const Elem res = resultant(f, p, dp);
  return ((d * (d - 1) / 2) % 2) ? f.neg(res) : res;
}

std::string to_text(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i].v;
  return os.str();
}

UniPoly parse_poly(const Field& f, const std::string& text) {
  std::vector<Elem> c;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw Error(Errc::parse_error, "bad polynomial text '" + text + "'");
    c.push_back(f.from_index(v));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return UniPoly(std::move(c));
}

}  // namespace vslab
