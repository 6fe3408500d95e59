#include "vslab/scan.hpp"

#include <atomic>
#include <thread>

#include "vslab/error.hpp"

namespace vslab {

ScanTotals::ScanTotals(std::size_t degree)
    : d(degree),
      hist(degree + 1, 0),
      hh((degree + 1) * (degree + 1), 0),
      g(degree + 1, 0),
      gg((degree + 1) * (degree + 1), 0) {}

void ScanTotals::merge(const ScanTotals& o) {
  profiles += o.profiles;
  sum_v += o.sum_v;
  sum_v2 += o.sum_v2;
  for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += o.hist[i];
  for (std::size_t i = 0; i < hh.size(); ++i) hh[i] += o.hh[i];
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += o.g[i];
  for (std::size_t i = 0; i < gg.size(); ++i) gg[i] += o.gg[i];
}

std::vector<u128> multiset_tuple_counts(const std::vector<unsigned>& multiplicities, std::size_t max_r) {
  // new[r] = sum_j C(r, j) old[r - j], j bounded by the root's multiplicity.
  std::vector<std::vector<u128>> binom(max_r + 1, std::vector<u128>(max_r + 1, 0));
  for (std::size_t n = 0; n <= max_r; ++n) {
    binom[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k < n ? binom[n - 1][k] : 0);
  }
  std::vector<u128> cur(max_r + 1, 0);
  cur[0] = 1;
  for (unsigned mult : multiplicities) {
    std::vector<u128> next(max_r + 1, 0);
    for (std::size_t r = 0; r <= max_r; ++r)
      for (std::size_t j = 0; j <= std::min<std::size_t>(mult, r); ++j) next[r] += binom[r][j] * cur[r - j];
    cur = std::move(next);
  }
  return cur;
}

namespace {

struct Worker {
  const FamilySpec& spec;
  const Field& f;
  std::uint32_t q;
  std::size_t d, L;
  std::vector<std::vector<Elem>> pw;  // pw[t][i] = t^i
  std::vector<Elem> fa, dfa;          // f_a and f_a' at every t
  std::vector<std::vector<u128>> ff;  // ff[k][r] = k(k-1)...(k-r+1)

  // scratch
  std::vector<Elem> base, dbase, val, coef, work;
  std::vector<std::uint32_t> cnt, special_cnt;
  std::vector<std::uint64_t> H;
  std::vector<u128> G;
  std::vector<std::uint32_t> specials;
  std::vector<std::vector<unsigned>> special_mults;

  explicit Worker(const FamilySpec& s)
      : spec(s), f(*s.field), q(s.field->q()), d(s.d), L(s.free_count()) {
    pw.assign(q, std::vector<Elem>(d + 1));
    const UniPoly fixed = fixed_part(spec), dfixed = derivative(f, fixed);
    fa.resize(q);
    dfa.resize(q);
    for (std::uint32_t t = 0; t < q; ++t) {
      pw[t][0] = f.one();
      for (std::size_t i = 1; i <= d; ++i) pw[t][i] = f.mul(pw[t][i - 1], Elem{t});
      fa[t] = eval(f, fixed, Elem{t});
      dfa[t] = eval(f, dfixed, Elem{t});
    }
    ff.assign(d + 1, std::vector<u128>(d + 1, 0));
    for (std::size_t k = 0; k <= d; ++k) {
      ff[k][0] = 1;
      for (std::size_t r = 1; r <= d; ++r) ff[k][r] = r <= k ? ff[k][r - 1] * (k - r + 1) : 0;
    }
    base.resize(q);
    dbase.resize(q);
    val.resize(q);
    cnt.assign(q, 0);
    special_cnt.assign(q, 0);
    special_mults.resize(q);
    H.resize(d + 1);
    G.resize(d + 1);
    coef = fixed.coeffs();
  }

  // Multiplicity of t as a root of f_b - f_b(t), known to be at least 2.
  unsigned multiplicity(Elem t, Elem c) {
    work = coef;
    work[0] = f.sub(work[0], c);
    unsigned mult = 0;
    while (work.size() > 1) {
      Elem carry{0};
      for (std::size_t i = work.size(); i-- > 0;) {
        const Elem next = f.add(work[i], f.mul(carry, t));
        work[i] = carry;
        carry = next;
      }
      work.pop_back();
      if (carry.v != 0) break;
      ++mult;
    }
    return mult;
  }

  void profile(ScanTotals& acc) {
    std::fill(cnt.begin(), cnt.end(), 0);
    specials.clear();
    for (std::uint32_t t = 0; t < q; ++t) ++cnt[val[t].v];
    std::fill(H.begin(), H.end(), 0);
    for (std::uint32_t c = 0; c < q; ++c) ++H[cnt[c]];

    // Values hit at a multiple root need the multiplicity DP; the rest are
    // covered by falling factorials.
    for (std::uint32_t t = 0; t < q; ++t) {
      const Elem der = f.add(dbase[t], coef[1]);
      if (der.v != 0) continue;
      const std::uint32_t c = val[t].v;
      if (special_cnt[c]++ == 0) specials.push_back(c);
      special_mults[c].push_back(multiplicity(Elem{t}, val[t]));
    }
    std::fill(G.begin(), G.end(), 0);
    for (std::size_t k = 1; k <= d; ++k) {
      std::uint64_t plain = H[k];
      if (plain == 0) continue;
      for (std::uint32_t c : specials) plain -= cnt[c] == k;
      for (std::size_t r = 1; r <= d; ++r) G[r] += plain * ff[k][r];
    }
    for (std::uint32_t c : specials) {
      auto& m = special_mults[c];
      m.resize(cnt[c], 1);  // simple roots sharing the value
      const auto tc = multiset_tuple_counts(m, d);
      for (std::size_t r = 1; r <= d; ++r) G[r] += tc[r];
      m.clear();
      special_cnt[c] = 0;
    }

    const std::uint64_t v = q - H[0];
    ++acc.profiles;
    acc.sum_v += v;
    acc.sum_v2 += u128(v) * v;
    const std::size_t w = d + 1;
    for (std::size_t k = 1; k <= d; ++k) {
      acc.hist[k] += H[k];
      acc.g[k] += G[k];
      for (std::size_t l = 1; l <= d; ++l) {
        acc.hh[k * w + l] += u128(H[k]) * H[l];
        acc.gg[k * w + l] += G[k] * G[l];
      }
    }
    acc.hist[0] += H[0];
  }

  // Processes the prefixes (b_{d-s-1}, ..., b_2) with indices in [begin, end).
  void run(std::uint64_t begin, std::uint64_t end, ScanTotals& acc) {
    const std::size_t P = L - 1;  // s <= d-2 guarantees L >= 1
    std::vector<Elem> prefix(P);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t i = P; i-- > 0;) {
        prefix[i] = Elem{static_cast<std::uint32_t>(x % q)};
        x /= q;
      }
      coef = fixed_part(spec).coeffs();
      // prefix[i] is the coefficient of T^{L - i}
      for (std::size_t i = 0; i < P; ++i) coef[L - i] = prefix[i];
      for (std::uint32_t t = 0; t < q; ++t) {
        Elem b = fa[t], db = dfa[t];
        for (std::size_t i = 0; i < P; ++i) {
          const std::size_t deg = L - i;
          b = f.add(b, f.mul(prefix[i], pw[t][deg]));
          db = f.add(db, f.mul(f.mul(prefix[i], f.from_int(static_cast<long long>(deg % f.p()))), pw[t][deg - 1]));
        }
        base[t] = b;
        dbase[t] = db;
      }
      for (std::uint32_t b1 = 0; b1 < q; ++b1) {
        coef[1] = Elem{b1};
        for (std::uint32_t t = 0; t < q; ++t) val[t] = f.add(base[t], f.mul(Elem{b1}, Elem{t}));
        profile(acc);
      }
    }
  }
};

}  // namespace

ScanTotals scan_family(const FamilySpec& spec, const ScanOptions& opt) {
  const std::uint64_t total = spec.b_count();
  if (opt.budget && total > opt.budget)
    throw Error(Errc::budget_exceeded, std::to_string(total) + " profiles exceed the budget of " + std::to_string(opt.budget));
  const std::uint64_t prefixes = total / spec.field->q();
  const std::size_t workers = std::max<std::size_t>(1, opt.workers);
  const auto chunks = split_range(prefixes, workers * 8);
  std::vector<ScanTotals> partial(chunks.size(), ScanTotals(spec.d));
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    Worker w(spec);
    for (std::size_t i; (i = next.fetch_add(1)) < chunks.size();) w.run(chunks[i].first, chunks[i].second, partial[i]);
  };
  if (workers == 1 || chunks.size() == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < std::min(workers, chunks.size()); ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  ScanTotals out(spec.d);
  for (const auto& p : partial) out.merge(p);
  return out;
}

namespace {

BigInt big(u128 v) { return big_from_u128(v); }

BigInt choose(std::size_t k, std::size_t r) { return r > k ? BigInt(0) : binomial(BigInt(static_cast<unsigned long>(k)), r); }

BigInt falling(std::size_t k, std::size_t r) {
  BigInt out = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (i >= k) return 0;
    out *= static_cast<unsigned long>(k - i);
  }
  return out;
}

void check_index(const ScanTotals& t, std::size_t x) {
  if (x == 0) throw Error(Errc::invalid_argument, "index must be >= 1");
  (void)t;
}

template <class Weight>
BigInt pair_sum(const ScanTotals& t, std::size_t m, std::size_t n, Weight w) {
  check_index(t, m);
  check_index(t, n);
  if (m > t.d || n > t.d) return 0;
  BigInt acc = 0;
  for (std::size_t k = 1; k <= t.d; ++k) {
    const BigInt wk = w(k, m);
    if (wk == 0) continue;
    for (std::size_t l = 1; l <= t.d; ++l) acc += big(t.hh_at(k, l)) * wk * w(l, n);
    acc -= big(t.hist[k]) * wk * w(k, n);
  }
  return acc;
}

}  // namespace

BigInt scan_chi(const ScanTotals& t, std::size_t r) {
  check_index(t, r);
  BigInt acc = 0;
  for (std::size_t k = r; k <= t.d; ++k) acc += big(t.hist[k]) * choose(k, r);
  return acc;
}

BigInt scan_smn(const ScanTotals& t, std::size_t m, std::size_t n) { return pair_sum(t, m, n, choose); }

BigInt scan_gamma_open_r(const ScanTotals& t, std::size_t r) {
  check_index(t, r);
  BigInt acc = 0;
  for (std::size_t k = r; k <= t.d; ++k) acc += big(t.hist[k]) * falling(k, r);
  return acc;
}

BigInt scan_gamma_closed_r(const ScanTotals& t, std::size_t r) {
  check_index(t, r);
  return r > t.d ? BigInt(0) : big(t.g[r]);
}

BigInt scan_gamma_open_mn(const ScanTotals& t, std::size_t m, std::size_t n) { return pair_sum(t, m, n, falling); }

BigInt scan_gamma_closed_mn(const ScanTotals& t, std::size_t m, std::size_t n) {
  check_index(t, m);
  check_index(t, n);
  return (m > t.d || n > t.d) ? BigInt(0) : big(t.gg_at(m, n));
}

}  // namespace vslab
