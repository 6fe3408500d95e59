#include "vslab/counting.hpp"

#include <algorithm>
#include <set>

#include "vslab/error.hpp"

namespace vslab {

void for_each_subset(std::uint32_t q, std::size_t r, const std::function<void(const std::vector<Elem>&)>& fn) {
  if (r > q) return;
  std::vector<Elem> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = Elem{static_cast<std::uint32_t>(i)};
  while (true) {
    fn(s);
    std::size_t i = r;
    while (i > 0 && s[i - 1].v == q - r + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1].v;
    for (std::size_t j = i; j < r; ++j) s[j].v = s[j - 1].v + 1;
  }
}

namespace {

void require_budget(const BigInt& needed, std::uint64_t cap, const char* what) {
  if (cap && needed > BigInt(std::to_string(cap))) throw Error(Errc::budget_exceeded, std::string(what) + " above the configured cap");
}

}  // namespace

std::optional<std::pair<std::vector<Elem>, Elem>> interpolating_b0(const FamilySpec& spec,
                                                                   const std::vector<Elem>& subset) {
  const Field& f = *spec.field;
  const std::size_t r = subset.size(), L = spec.free_count();
  if (r <= spec.d - spec.s) throw Error(Errc::not_unique_regime, "subset size must exceed d-s");
  if (std::set<Elem>(subset.begin(), subset.end()).size() != r)
    throw Error(Errc::invalid_argument, "subset has repeated elements");
  const UniPoly R = divmod(f, fixed_part(spec), UniPoly::from_roots(f, subset)).rem;
  if (!R.is_zero() && R.degree() > L) return std::nullopt;
  std::vector<Elem> b(L);
  for (std::size_t i = 0; i < L; ++i) b[i] = f.neg(R.coeff(L - i));
  const Elem b0 = f.neg(R.coeff(0));
  const UniPoly g = family_poly(spec, b, b0);
  for (Elem x : subset)
    if (eval(f, g, x).v != 0) throw Error(Errc::invalid_argument, "interpolation postcondition failed");
  return std::make_pair(std::move(b), b0);
}

BigInt chi_r(const FamilySpec& spec, std::size_t r, ChiMethod method, const CountOptions& opt) {
  if (r == 0) throw Error(Errc::invalid_argument, "r must be >= 1");
  if (r > spec.d) return 0;
  if (r <= spec.d - spec.s && method == ChiMethod::profile)
    throw Error(Errc::regime_violation, "profile method needs r > d-s");
  if (method == ChiMethod::profile)
    return scan_chi(scan_family(spec, {opt.workers, opt.profile_budget}), r);
  require_budget(binomial(BigInt(spec.field->q()), r), opt.subset_budget, "C(q,r)");
  BigInt count = 0;
  for_each_subset(spec.field->q(), r, [&](const std::vector<Elem>& sub) {
    if (interpolating_b0(spec, sub)) ++count;
  });
  return count;
}

namespace {

// Constant value of f on the subset, or nullopt.
std::optional<std::uint32_t> constant_on(const std::vector<Elem>& vals, const std::vector<Elem>& sub) {
  const std::uint32_t c = vals[sub[0].v].v;
  for (Elem x : sub)
    if (vals[x.v].v != c) return std::nullopt;
  return c;
}

}  // namespace

BigInt s_mn(const FamilySpec& spec, std::size_t m, std::size_t n, SmnMethod method, const CountOptions& opt) {
  if (m == 0 || n == 0) throw Error(Errc::invalid_argument, "m and n must be >= 1");
  if (m > spec.d || n > spec.d) return 0;
  if (method == SmnMethod::profile)
    return scan_smn(scan_family(spec, {opt.workers, opt.profile_budget}), m, n);

  const Field& f = *spec.field;
  const BigInt per_b = binomial(BigInt(f.q()), m) * binomial(BigInt(f.q()), n);
  require_budget(per_b * BigInt(std::to_string(spec.b_count())), opt.subset_budget, "subset pairs");
  BigInt total = 0;
  enumerate_b(spec, [&](const std::vector<Elem>& b) {
    const auto vals = batch_eval(f, family_poly(spec, b, Elem{0}));
    // f_b + b0j vanishes on Gamma_j iff f_b is constant (= -b0j) there.
    std::vector<std::uint32_t> c1, c2;
    for_each_subset(f.q(), m, [&](const auto& g) {
      if (auto c = constant_on(vals, g)) c1.push_back(*c);
    });
    for_each_subset(f.q(), n, [&](const auto& g) {
      if (auto c = constant_on(vals, g)) c2.push_back(*c);
    });
    for (auto x : c1)
      for (auto y : c2) total += x != y;
  });
  return total;
}

ChiVector chi_vector(const ScanTotals& t, std::size_t lo, std::size_t hi) {
  ChiVector out;
  for (std::size_t r = std::max<std::size_t>(lo, 1); r <= hi; ++r) out[r] = r > t.d ? BigInt(0) : scan_chi(t, r);
  return out;
}

SMatrix s_matrix(const ScanTotals& t, std::size_t lo, std::size_t hi) {
  SMatrix out;
  for (std::size_t m = 1; m <= t.d; ++m)
    for (std::size_t n = 1; n <= t.d; ++n)
      if (m + n >= lo && m + n <= hi) out[{m, n}] = scan_smn(t, m, n);
  return out;
}

GammaCounts gamma_counts_r(const ScanTotals& t, std::size_t r) {
  if (r == 0 || r > t.d) throw Error(Errc::invalid_argument, "r must lie in [1, d]");
  return {scan_gamma_open_r(t, r), scan_gamma_closed_r(t, r)};
}

GammaCounts gamma_counts_mn(const ScanTotals& t, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || m > t.d || n > t.d) throw Error(Errc::invalid_argument, "m, n must lie in [1, d]");
  return {scan_gamma_open_mn(t, m, n), scan_gamma_closed_mn(t, m, n)};
}

GammaCounts gamma_counts_r(const FamilySpec& spec, std::size_t r, const CountOptions& opt) {
  return gamma_counts_r(scan_family(spec, {opt.workers, opt.profile_budget}), r);
}

GammaCounts gamma_counts_mn(const FamilySpec& spec, std::size_t m, std::size_t n, const CountOptions& opt) {
  return gamma_counts_mn(scan_family(spec, {opt.workers, opt.profile_budget}), m, n);
}

Matrix linear_system_matrix(const FamilySpec& spec, const std::vector<Elem>& g1, const std::vector<Elem>& g2,
                            std::vector<Elem>* rhs) {
  const Field& f = *spec.field;
  const std::size_t L = spec.free_count(), cols = L + 2;
  const UniPoly fa = fixed_part(spec);
  Matrix m;
  if (rhs) rhs->clear();
  auto add_rows = [&](const std::vector<Elem>& g, std::size_t which) {
    for (Elem x : g) {
      std::vector<Elem> row(cols, Elem{0});
      for (std::size_t i = 0; i < L; ++i) row[i] = f.pow(x, L - i);
      row[L + which] = f.one();
      m.push_back(std::move(row));
      if (rhs) rhs->push_back(f.neg(eval(f, fa, x)));
    }
  };
  add_rows(g1, 0);
  add_rows(g2, 1);
  return m;
}

LinearAudit linear_system_audit(const FamilySpec& spec, const std::vector<Elem>& g1, const std::vector<Elem>& g2) {
  const std::set<Elem> s1(g1.begin(), g1.end()), s2(g2.begin(), g2.end());
  if (s1.size() != g1.size() || s2.size() != g2.size()) throw Error(Errc::invalid_argument, "repeated subset elements");
  for (Elem x : g1)
    if (s2.count(x)) throw Error(Errc::overlapping_subsets, "the two subsets intersect");
  if (g1.empty() || g2.empty() || g1.size() + g2.size() > spec.d - spec.s)
    throw Error(Errc::regime_violation, "need m, n >= 1 and m + n <= d - s");
  const Field& f = *spec.field;
  std::vector<Elem> rhs;
  Matrix m = linear_system_matrix(spec, g1, g2, &rhs);
  const std::size_t cols = spec.free_count() + 2;
  const SolveInfo all = solve_info(f, m, rhs);
  // Adjoin b01 - b02 = 0 to count the excluded diagonal.
  std::vector<Elem> diag(cols, Elem{0});
  diag[cols - 2] = f.one();
  diag[cols - 1] = f.neg(f.one());
  m.push_back(diag);
  rhs.push_back(Elem{0});
  const SolveInfo eq = solve_info(f, m, rhs);
  auto count = [&](const SolveInfo& s) {
    return s.consistent ? ipow(BigInt(f.q()), static_cast<unsigned long>(cols - s.rank)) : BigInt(0);
  };
  LinearAudit out;
  out.rank = all.rank;
  out.count_all = count(all);
  out.count_strict = out.count_all - count(eq);
  return out;
}

std::size_t jacobian_rank(const FamilySpec& spec, const std::vector<Elem>& b0_full, const std::vector<Elem>& alpha) {
  const Field& f = *spec.field;
  const std::size_t L = spec.free_count(), r = alpha.size();
  if (b0_full.size() != L + 1) throw Error(Errc::length_mismatch, "b0_full must have length d-s");
  const std::vector<Elem> b(b0_full.begin(), b0_full.end() - 1);
  const UniPoly g = family_poly(spec, b, b0_full.back());
  const UniPoly dg = derivative(f, g);
  Matrix m;
  for (std::size_t i = 0; i < r; ++i) {
    if (eval(f, g, alpha[i]).v != 0) throw Error(Errc::not_on_variety, "alpha is not a root of f_{b0}");
    std::vector<Elem> row(L + 1 + r, Elem{0});
    for (std::size_t j = 0; j <= L; ++j) row[j] = f.pow(alpha[i], L - j);
    row[L + 1 + i] = eval(f, dg, alpha[i]);
    m.push_back(std::move(row));
  }
  return rank(f, m);
}

}  // namespace vslab
