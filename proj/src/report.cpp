#include "vslab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "vslab/error.hpp"

namespace vslab {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t i) {
  SplitMix64 g(seed + i * 0x9e3779b97f4a7c15ULL);
  return g.next();
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

namespace {

std::vector<Elem> a_from_index(const FieldPtr& f, std::size_t s, std::uint64_t idx) {
  std::vector<Elem> a(s);
  for (std::size_t i = s; i-- > 0;) {
    a[i] = f->from_index(static_cast<std::uint32_t>(idx % f->q()));
    idx /= f->q();
  }
  return a;
}

std::uint64_t a_space(const FieldPtr& f, std::size_t s) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (n > (UINT64_MAX >> 1) / f->q()) return UINT64_MAX;
    n *= f->q();
  }
  return n;
}

}  // namespace

std::vector<std::vector<Elem>> all_a(const FieldPtr& f, std::size_t s) {
  const std::uint64_t n = a_space(f, s);
  if (n > 10'000'000) throw Error(Errc::budget_exceeded, "too many a-vectors to list");
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(a_from_index(f, s, i));
  return out;
}

std::vector<std::vector<Elem>> random_a(const FieldPtr& f, std::size_t s, std::size_t count, std::uint64_t seed) {
  const std::uint64_t n = a_space(f, s);
  if (count >= n) return all_a(f, s);
  SplitMix64 rng(seed);
  std::set<std::uint64_t> seen;
  std::vector<std::vector<Elem>> out;
  while (out.size() < count) {
    const std::uint64_t idx = rng.below(n);
    if (seen.insert(idx).second) out.push_back(a_from_index(f, s, idx));
  }
  return out;
}

std::string rational_text(const BigRational& r) {
  BigRational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string float_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const ChiVector& chi) {
  Json j = Json::object();
  for (const auto& [r, v] : chi) j[std::to_string(r)] = v.get_str();
  return j;
}

Json to_json(const SMatrix& S) {
  Json j = Json::object();
  for (const auto& [mn, v] : S) j[std::to_string(mn.first) + "," + std::to_string(mn.second)] = v.get_str();
  return j;
}

Json to_json(const MomentReport& r) {
  Json j;
  j["key"] = r.key;
  j["q"] = r.q;
  j["d"] = r.d;
  j["s"] = r.s;
  j["mean"] = rational_text(r.mean);
  j["mu_q"] = rational_text(r.mu_q);
  j["mean_residual"] = rational_text(r.mean_residual);
  j["second_moment"] = rational_text(r.second_moment);
  j["mu2_q2"] = rational_text(r.mu2_q2);
  j["second_residual"] = rational_text(r.second_residual);
  if (r.reconstructed_mean) {
    j["reconstructed_mean"] = rational_text(*r.reconstructed_mean);
    j["mean_identity"] = *r.reconstructed_mean == r.mean;
  }
  j["reconstructed_second_exact"] = rational_text(r.reconstructed_exact);
  j["second_identity_exact"] = r.reconstructed_exact == r.second_moment;
  j["reconstructed_second_paper"] = rational_text(r.reconstructed_paper);
  j["paper_residual"] = rational_text(r.paper_residual);
  j["chi"] = to_json(r.chi);
  j["S"] = to_json(r.S);
  return j;
}

Json to_json(const BoundCheck& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  j["q"] = c.args.q;
  j["d"] = c.args.d;
  j["s"] = c.args.s;
  if (c.args.r) j["r"] = *c.args.r;
  if (c.args.m) j["m"] = *c.args.m;
  if (c.args.n) j["n"] = *c.args.n;
  j["lhs"] = rational_text(c.lhs);
  j["rhs"] = float_text(c.rhs);
  j["applicable"] = c.applicable;
  j["pass"] = c.pass ? Json(*c.pass) : Json(nullptr);
  return j;
}

Json to_json(const AppendixReport& r) {
  Json j;
  j["check"] = r.check;
  j["p"] = r.p;
  j["d"] = r.d;
  j["case"] = case_name(r.tag);
  j["variables"] = r.names;
  j["computed"] = to_text(r.computed, r.names);
  j["target"] = to_text(r.target, r.names);
  j["matched"] = match_name(r.matched);
  j["scalar"] = r.scalar;
  j["deg_B0"] = r.deg_b0;
  j["deg_B0_expected"] = r.d - 1;
  j["weighted_homogeneous"] = r.weighted_homogeneous;
  return j;
}

Json to_json(const LinearAudit& a) {
  Json j;
  j["rank"] = a.rank;
  j["count_all"] = a.count_all.get_str();
  j["count_strict"] = a.count_strict.get_str();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_text(const Csv& c) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += quote(cells[i]);
    }
    out += '\n';
  };
  line(c.header);
  for (const auto& r : c.rows) line(r);
  return out;
}

Csv parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> cur;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      cur.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !cell.empty()) {
        cur.push_back(std::move(cell));
        lines.push_back(std::move(cur));
      }
      cur.clear();
      cell.clear();
      any = false;
    } else if (c != '\r') {
      cell += c;
      any = true;
    }
  }
  if (quoted) throw Error(Errc::parse_error, "unterminated quote in CSV");
  if (any || !cell.empty()) {
    cur.push_back(std::move(cell));
    lines.push_back(std::move(cur));
  }
  Csv out;
  if (lines.empty()) throw Error(Errc::parse_error, "empty CSV");
  out.header = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != out.header.size()) throw Error(Errc::parse_error, "CSV row width differs from header");
    out.rows.push_back(std::move(lines[i]));
  }
  return out;
}

Csv read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << text;
}

Csv moment_csv(const std::vector<MomentReport>& reports) {
  Csv c;
  c.header = {"spec", "q", "d", "s", "mean", "mu_q", "residual", "second_moment", "mu2_q2", "residual2",
              "mean_identity", "second_identity_exact", "paper_residual"};
  for (const auto& r : reports)
    c.rows.push_back({r.key, std::to_string(r.q), std::to_string(r.d), std::to_string(r.s), rational_text(r.mean),
                      rational_text(r.mu_q), rational_text(r.mean_residual), rational_text(r.second_moment),
                      rational_text(r.mu2_q2), rational_text(r.second_residual),
                      r.reconstructed_mean ? (*r.reconstructed_mean == r.mean ? "true" : "false") : "n/a",
                      r.reconstructed_exact == r.second_moment ? "true" : "false", rational_text(r.paper_residual)});
  return c;
}

Csv chi_csv(const std::vector<MomentReport>& reports, const std::vector<std::vector<BoundCheck>>& checks) {
  Csv c;
  c.header = {"spec", "r", "chi_r", "q^(d-s)/r!", "bound_rhs", "pass"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    for (const auto& [r, v] : rep.chi) {
      BigRational main(ipow(BigInt(rep.q), rep.d - rep.s), factorial(r));
      main.canonicalize();
      std::string rhs = "", pass = "n/a";
      if (i < checks.size())
        for (const auto& b : checks[i])
          if (b.kind == BoundKind::chi && b.args.r == r) {
            rhs = float_text(b.rhs);
            if (b.pass) pass = *b.pass ? "true" : "false";
          }
      c.rows.push_back({rep.key, std::to_string(r), v.get_str(), rational_text(main), rhs, pass});
    }
  }
  return c;
}

Csv bound_csv(const std::vector<BoundCheck>& checks) {
  Csv c;
  c.header = {"kind", "q", "d", "s", "r", "m", "n", "lhs", "rhs", "applicable", "pass"};
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& b : checks)
    c.rows.push_back({kind_name(b.kind), std::to_string(b.args.q), std::to_string(b.args.d), std::to_string(b.args.s),
                      opt(b.args.r), opt(b.args.m), opt(b.args.n), rational_text(b.lhs), float_text(b.rhs),
                      b.applicable ? "true" : "false", b.pass ? (*b.pass ? "true" : "false") : "n/a"});
  return c;
}

namespace {

// Integers compare numerically, everything else as text; integers sort first.
bool cell_less(const std::string& a, const std::string& b) {
  auto is_int = [](const std::string& s) {
    return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const bool ia = is_int(a), ib = is_int(b);
  if (ia && ib) return std::stoull(a) < std::stoull(b);
  if (ia != ib) return ia;
  return a < b;
}

}  // namespace

Csv report_merge(const std::vector<Csv>& inputs) {
  if (inputs.empty()) throw Error(Errc::invalid_argument, "nothing to merge");
  Csv out;
  out.header = inputs.front().header;
  for (const auto& in : inputs) {
    if (in.header != out.header) throw Error(Errc::schema_mismatch, "CSV headers differ");
    out.rows.insert(out.rows.end(), in.rows.begin(), in.rows.end());
  }
  std::vector<std::size_t> keys;
  for (const char* name : {"spec", "q", "d", "s", "r", "m", "n"}) {
    auto it = std::find(out.header.begin(), out.header.end(), name);
    if (it != out.header.end()) keys.push_back(static_cast<std::size_t>(it - out.header.begin()));
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [&](const auto& x, const auto& y) {
    for (std::size_t k : keys) {
      if (cell_less(x[k], y[k])) return true;
      if (cell_less(y[k], x[k])) return false;
    }
    return false;
  });
  return out;
}

Csv report_merge(const std::vector<std::string>& paths) {
  std::vector<Csv> in;
  for (const auto& p : paths) in.push_back(read_csv(p));
  return report_merge(in);
}

}  // namespace vslab
