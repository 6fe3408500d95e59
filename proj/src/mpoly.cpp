#include "vslab/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vslab/error.hpp"

namespace vslab {

namespace {

std::uint32_t mod_inv(std::uint32_t x, std::uint32_t p) {
  if (x == 0) throw Error(Errc::division_by_zero, "inverse of zero in F_p");
  std::uint64_t r = 1, b = x, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(long long c, std::uint32_t p) {
  long long r = c % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.p() != b.p() || a.nvars() != b.nvars())
    throw Error(Errc::invalid_argument, "multivariate operands over different rings");
}

std::uint64_t degree_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const auto da = degree_sum(a), db = degree_sum(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly MultiPoly::constant(std::uint32_t p, std::size_t nvars, long long c) {
  MultiPoly r(p, nvars);
  r.add_term(Exponents(nvars, 0), reduce(c, p));
  return r;
}

MultiPoly MultiPoly::variable(std::uint32_t p, std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(p, e, 1);
}

MultiPoly MultiPoly::monomial(std::uint32_t p, const Exponents& e, long long c) {
  MultiPoly r(p, e.size());
  r.add_term(e, reduce(c, p));
  return r;
}

std::uint32_t MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponents& e, std::uint32_t c) {
  if (c % p_ == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c % p_);
  if (inserted) return;
  it->second = static_cast<std::uint32_t>((std::uint64_t(it->second) + c) % p_);
  if (it->second == 0) terms_.erase(it);
}

std::size_t MultiPoly::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, e.at(var));
  return d;
}

std::size_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_sum(terms_.rbegin()->first);
}

std::uint32_t MultiPoly::eval(const std::vector<std::uint32_t>& point) const {
  if (point.size() != nvars_) throw Error(Errc::length_mismatch, "evaluation point arity");
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t = t * (point[i] % p_) % p_;
    acc = (acc + t) % p_;
  }
  return static_cast<std::uint32_t>(acc);
}

MultiPoly MultiPoly::drop_vars(const std::vector<std::size_t>& vars) const {
  MultiPoly r(p_, nvars_);
  for (const auto& [e, c] : terms_)
    if (std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return e.at(v) == 0; }))
      r.terms_.emplace(e, c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.p() == 0) return b;
  if (b.p() == 0) return a;
  check_compatible(a, b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.p(), a.nvars());
  for (const auto& [e, c] : a.terms()) r.add_term(e, a.p() - c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  MultiPoly r(a.p(), a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, static_cast<std::uint32_t>(std::uint64_t(ca) * cb % a.p()));
    }
  return r;
}

MultiPoly scale(const MultiPoly& a, std::uint32_t c) {
  MultiPoly r(a.p(), a.nvars());
  for (const auto& [e, x] : a.terms()) r.add_term(e, static_cast<std::uint32_t>(std::uint64_t(x) * (c % a.p()) % a.p()));
  return r;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  if (b.is_zero()) throw Error(Errc::division_by_zero, "multivariate division by zero");
  const std::uint32_t p = a.p();
  const auto& [lb, cb] = *b.terms().rbegin();
  const std::uint32_t inv_cb = mod_inv(cb, p);
  MultiPoly rem = a, quot(p, a.nvars());
  Exponents e(a.nvars());
  while (!rem.is_zero()) {
    const auto [lr, cr] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lr[i] < lb[i]) throw Error(Errc::inexact_division, "divisor does not divide dividend");
      e[i] = lr[i] - lb[i];
    }
    const auto t = static_cast<std::uint32_t>(std::uint64_t(cr) * inv_cb % p);
    quot.add_term(e, t);
    Exponents m(e.size());
    for (const auto& [eb, c] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = e[i] + eb[i];
      rem.add_term(m, static_cast<std::uint32_t>(p - std::uint64_t(t) * c % p));
    }
  }
  return quot;
}

std::uint32_t scalar_ratio(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return 0;
  check_compatible(a, b);
  const std::uint32_t p = a.p();
  std::uint32_t lambda = 0;
  auto ia = a.terms().begin();
  for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return 0;
    const auto r = static_cast<std::uint32_t>(std::uint64_t(ia->second) * mod_inv(ib->second, p) % p);
    if (lambda == 0) lambda = r;
    if (r != lambda) return 0;
  }
  return lambda;
}

MultiPoly det_bareiss(MultiMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::invalid_argument, "empty matrix");
  const MultiPoly& ref = m[0][0];
  MultiPoly prev = MultiPoly::constant(ref.p(), ref.nvars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r)
      if (!m[r][k].is_zero() && (piv == n || m[r][k].size() < m[piv][k].size())) piv = r;
    if (piv == n) return MultiPoly(ref.p(), ref.nvars());
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly(ref.p(), ref.nvars());
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

MultiPoly laplace(const MultiMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  const MultiPoly& ref = m[0][0];
  if (row == n) return MultiPoly::constant(ref.p(), ref.nvars(), 1);
  MultiPoly acc(ref.p(), ref.nvars());
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (m[row][c].is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    const MultiPoly minor = laplace(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
    const MultiPoly term = m[row][c] * minor;
    acc = (idx % 2) ? acc - term : acc + term;
  }
  return acc;
}

}  // namespace

MultiPoly det_laplace(const MultiMatrix& m) {
  if (m.empty()) throw Error(Errc::invalid_argument, "empty matrix");
  std::vector<std::size_t> cols(m.size());
  std::iota(cols.begin(), cols.end(), 0);
  return laplace(m, cols, 0);
}

MultiPoly determinant(const MultiMatrix& m) { return m.size() <= 6 ? det_laplace(m) : det_bareiss(m); }

MultiPoly symbolic_principal_subresultant(const TPoly& f, const TPoly& g, std::size_t j) {
  auto degree = [](const TPoly& t) {
    std::size_t d = t.size();
    while (d > 0 && t[d - 1].is_zero()) --d;
    if (d < 2) throw Error(Errc::degenerate_leading_coefficient, "symbolic operand has T-degree < 1");
    if (d != t.size()) throw Error(Errc::degenerate_leading_coefficient, "leading T-coefficient is zero");
    return d - 1;
  };
  const std::size_t m = degree(f), n = degree(g);
  if (j > std::min(m, n)) throw Error(Errc::invalid_argument, "subresultant order exceeds degrees");
  const MultiPoly& ref = f[0].p() ? f[0] : f.back();
  const std::size_t dim = m + n - 2 * j;
  if (dim == 0) return MultiPoly::constant(ref.p(), ref.nvars(), 1);
  const MultiPoly zero(ref.p(), ref.nvars());
  MultiMatrix rows;
  auto push_rows = [&](const TPoly& p, std::size_t deg, std::size_t count) {
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<MultiPoly> row(dim, zero);
      for (std::size_t i = 0; i <= deg; ++i)
        if (r + i < dim) row[r + i] = p[deg - i].p() ? p[deg - i] : zero;
      rows.push_back(std::move(row));
    }
  };
  push_rows(f, m, n - j);
  push_rows(g, n, m - j);
  return determinant(rows);
}

MultiPoly symbolic_resultant(const TPoly& f, const TPoly& g) { return symbolic_principal_subresultant(f, g, 0); }
MultiPoly symbolic_subres1(const TPoly& f, const TPoly& g) { return symbolic_principal_subresultant(f, g, 1); }

std::uint64_t WeightSystem::weight(const Exponents& e) const {
  if (e.size() != w.size()) throw Error(Errc::length_mismatch, "weight system arity");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
  return s;
}

std::map<std::uint64_t, MultiPoly> weight_decompose(const MultiPoly& f, const WeightSystem& ws) {
  std::map<std::uint64_t, MultiPoly> out;
  for (const auto& [e, c] : f.terms()) {
    auto [it, _] = out.try_emplace(ws.weight(e), f.p(), f.nvars());
    it->second.add_term(e, c);
  }
  return out;
}

std::string to_text(const MultiPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    bool wrote = false;
    if (c != 1 || constant) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names.at(i);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::string> b_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("B" + std::to_string(i));
  return v;
}

}  // namespace vslab
