// vslab: experiment runner. Exit codes: 0 all checks pass, 1 a check failed, 2 usage/config error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "vslab/appendix.hpp"
#include "vslab/bounds.hpp"
#include "vslab/counting.hpp"
#include "vslab/error.hpp"
#include "vslab/moments.hpp"
#include "vslab/report.hpp"

using namespace vslab;

namespace {

// JSON config: a flat object whose keys are long flag names.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    Json j = Json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        j[name] = res.size() == 1 ? Json(res.front()) : Json(res);
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      if (value.is_array())
        for (const auto& v : value) item.inputs.push_back(text(v));
      else if (value.is_boolean())
        item.inputs.push_back(value.get<bool>() ? "true" : "false");
      else
        item.inputs.push_back(text(value));
      items.push_back(std::move(item));
    }
    return items;
  }
};

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::string field = "5^1";
  std::string fields;
  std::vector<std::size_t> d{4};
  std::vector<std::size_t> s{1};
  std::string a = "all";
  std::uint64_t seed = 42;
  std::string out;
  std::size_t workers = 1;
  std::uint64_t profile_budget = 0;
  std::uint64_t subset_budget = 1'000'000;
  std::string method = "profile";
  std::string mode = "exact";
  std::vector<std::size_t> r, m, n;
  std::vector<std::uint32_t> p{7};
  std::string check = "all";
  std::string expect_case;
  std::string g1, g2;
  std::size_t trials = 0;
};

struct Failure {
  std::string what;
};

std::vector<FieldPtr> fields_of(const Options& o) {
  // Split on commas, gluing modulus coefficients back onto their descriptor.
  std::vector<std::string> parts;
  std::stringstream ss(o.fields.empty() ? o.field : o.fields);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find('^') == std::string::npos && !parts.empty())
      parts.back() += "," + tok;
    else
      parts.push_back(tok);
  }
  std::vector<FieldPtr> out;
  for (const auto& s : parts) out.push_back(Field::parse(s));
  return out;
}

std::vector<std::vector<Elem>> a_choices(const Options& o, const FieldPtr& f, std::size_t s, std::uint64_t salt) {
  if (s == 0) return {{}};
  if (o.a == "all") return all_a(f, s);
  if (o.a.rfind("random:", 0) == 0) {
    const std::size_t count = std::stoull(o.a.substr(7));
    if (count == 0) throw Error(Errc::invalid_argument, "random:N needs N >= 1");
    return random_a(f, s, count, SplitMix64::at(o.seed, salt));
  }
  return {parse_elems(*f, o.a)};
}

struct Instance {
  FamilySpec spec;
};

std::vector<Instance> instances(const Options& o) {
  std::vector<Instance> out;
  std::uint64_t salt = 0;
  for (const auto& f : fields_of(o))
    for (std::size_t d : o.d)
      for (std::size_t s : o.s) {
        if (s + 2 > d) throw Error(Errc::regime_violation, "need s <= d - 2");
        for (auto& a : a_choices(o, f, s, salt++)) out.push_back({FamilySpec::make(f, d, s, a)});
      }
  return out;
}

ScanTotals scan(const Options& o, const FamilySpec& spec) { return scan_family(spec, {o.workers, o.profile_budget}); }

CountOptions count_opts(const Options& o) { return {o.workers, o.subset_budget, o.profile_budget}; }

Json envelope(const Options& o) {
  Json j;
  j["command"] = o.command;
  j["seed"] = o.seed;
  return j;
}

Csv with_seed(Csv c, std::uint64_t seed) {
  c.header.push_back("seed");
  for (auto& row : c.rows) row.push_back(std::to_string(seed));
  return c;
}

Csv prepend(Csv c, const std::string& name, const std::string& value) {
  c.header.insert(c.header.begin(), name);
  for (auto& row : c.rows) row.insert(row.begin(), value);
  return c;
}

void append(Csv& into, const Csv& from) {
  if (into.header.empty()) into.header = from.header;
  into.rows.insert(into.rows.end(), from.rows.begin(), from.rows.end());
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const Options& o, const Json& j, const Csv& csv) {
  if (o.out.empty()) {
    std::cout << dump(j);
  } else if (ends_with(o.out, ".csv")) {
    write_text(o.out, csv_text(with_seed(csv, o.seed)));
  } else {
    write_text(o.out, dump(j));
  }
}

int finish(const std::vector<Failure>& failures) {
  for (const auto& f : failures) std::cerr << "FAIL " << f.what << "\n";
  return failures.empty() ? 0 : 1;
}

int cmd_moments(const Options& o) {
  Json j = envelope(o);
  j["mode"] = o.mode;
  std::vector<MomentReport> reps;
  for (const auto& inst : instances(o)) {
    reps.push_back(moment_report(inst.spec, scan(o, inst.spec)));
    Json r = to_json(reps.back());
    if (o.command == "second-moment")
      r["second_moment_reconstructed"] = rational_text(o.mode == "paper" ? reps.back().reconstructed_paper
                                                                         : reps.back().reconstructed_exact);
    j["reports"].push_back(r);
  }
  emit(o, j, moment_csv(reps));
  return 0;
}

ChiMethod chi_method(const std::string& m) {
  if (m == "profile") return ChiMethod::profile;
  if (m == "subsets") return ChiMethod::subsets;
  throw Error(Errc::invalid_argument, "chi method must be profile or subsets");
}

SmnMethod smn_method(const std::string& m) {
  if (m == "profile") return SmnMethod::profile;
  if (m == "brute") return SmnMethod::brute;
  throw Error(Errc::invalid_argument, "smn method must be profile or brute");
}

int cmd_chi(const Options& o) {
  Json j = envelope(o);
  j["method"] = o.method;
  Csv csv{{"spec", "r", "chi_r"}, {}};
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    std::vector<std::size_t> rs = o.r;
    if (rs.empty())
      for (std::size_t r = spec.d - spec.s + 1; r <= spec.d; ++r) rs.push_back(r);
    ChiVector chi;
    for (std::size_t r : rs) chi[r] = chi_r(spec, r, chi_method(o.method), count_opts(o));
    Json r;
    r["key"] = spec.key();
    r["chi"] = to_json(chi);
    j["reports"].push_back(r);
    for (const auto& [rr, v] : chi) csv.rows.push_back({spec.key(), std::to_string(rr), v.get_str()});
  }
  emit(o, j, csv);
  return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> mn_pairs(const Options& o, std::size_t d) {
  std::vector<std::size_t> ms = o.m, ns = o.n;
  if (ms.empty())
    for (std::size_t i = 1; i <= d; ++i) ms.push_back(i);
  if (ns.empty())
    for (std::size_t i = 1; i <= d; ++i) ns.push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m : ms)
    for (std::size_t n : ns) out.push_back({m, n});
  return out;
}

int cmd_smn(const Options& o) {
  Json j = envelope(o);
  j["method"] = o.method;
  Csv csv{{"spec", "m", "n", "S_mn"}, {}};
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    SMatrix S;
    for (auto [m, n] : mn_pairs(o, spec.d)) S[{m, n}] = s_mn(spec, m, n, smn_method(o.method), count_opts(o));
    Json r;
    r["key"] = spec.key();
    r["S"] = to_json(S);
    j["reports"].push_back(r);
    for (const auto& [mn, v] : S)
      csv.rows.push_back({spec.key(), std::to_string(mn.first), std::to_string(mn.second), v.get_str()});
  }
  emit(o, j, csv);
  return 0;
}

int cmd_gamma(const Options& o) {
  Json j = envelope(o);
  Csv csv{{"spec", "r", "m", "n", "affine_open", "closed"}, {}};
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    const ScanTotals t = scan(o, spec);
    Json r;
    r["key"] = spec.key();
    std::vector<std::size_t> rs = o.r;
    if (rs.empty())
      for (std::size_t i = 1; i <= spec.d; ++i) rs.push_back(i);
    for (std::size_t rr : rs) {
      const auto g = gamma_counts_r(t, rr);
      r["gamma_r"][std::to_string(rr)] = {{"affine_open", g.affine_open.get_str()}, {"closed", g.closed.get_str()}};
      csv.rows.push_back({spec.key(), std::to_string(rr), "", "", g.affine_open.get_str(), g.closed.get_str()});
    }
    for (auto [m, n] : mn_pairs(o, spec.d)) {
      const auto g = gamma_counts_mn(t, m, n);
      r["gamma_mn"][std::to_string(m) + "," + std::to_string(n)] = {{"affine_open", g.affine_open.get_str()},
                                                                    {"closed", g.closed.get_str()}};
      csv.rows.push_back(
          {spec.key(), "", std::to_string(m), std::to_string(n), g.affine_open.get_str(), g.closed.get_str()});
    }
    j["reports"].push_back(r);
  }
  emit(o, j, csv);
  return 0;
}

int cmd_verify_identities(const Options& o) {
  Json j = envelope(o);
  std::vector<Failure> failures;
  Csv csv{{"spec", "mean_direct", "mean_reconstructed", "mean_ok", "second_direct", "second_reconstructed",
           "second_ok", "paper_residual"},
          {}};
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    const MomentReport rep = moment_report(spec, scan(o, spec));
    const BigRational mean = value_set_mean(spec), second = value_set_second_moment(spec);
    const BigRational recon_mean =
        spec.s >= 1 ? *rep.reconstructed_mean : cohen_exact_mean(BigInt(spec.field->q()), spec.d);
    const bool mean_ok = mean == recon_mean, second_ok = second == rep.reconstructed_exact;
    if (!mean_ok) failures.push_back({spec.key() + " mean"});
    if (!second_ok) failures.push_back({spec.key() + " second moment"});
    Json r;
    r["key"] = spec.key();
    r["mean_direct"] = rational_text(mean);
    r["mean_reconstructed"] = rational_text(recon_mean);
    r["mean_ok"] = mean_ok;
    r["second_direct"] = rational_text(second);
    r["second_reconstructed_exact"] = rational_text(rep.reconstructed_exact);
    r["second_ok"] = second_ok;
    r["paper_residual"] = rational_text(rep.paper_residual);
    j["reports"].push_back(r);
    csv.rows.push_back({spec.key(), rational_text(mean), rational_text(recon_mean), mean_ok ? "true" : "false",
                        rational_text(second), rational_text(rep.reconstructed_exact), second_ok ? "true" : "false",
                        rational_text(rep.paper_residual)});
  }
  j["pass"] = failures.empty();
  emit(o, j, csv);
  return finish(failures);
}

int cmd_verify_bounds(const Options& o) {
  Json j = envelope(o);
  std::vector<Failure> failures;
  Csv csv;
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    const auto checks = bound_suite(spec, scan(o, spec));
    Json r;
    r["key"] = spec.key();
    r["checks"] = Json::array();
    for (const auto& c : checks) {
      r["checks"].push_back(to_json(c));
      if (c.pass && !*c.pass) failures.push_back({spec.key() + " " + kind_name(c.kind)});
    }
    j["reports"].push_back(r);
    append(csv, prepend(bound_csv(checks), "spec", spec.key()));
  }
  j["pass"] = failures.empty();
  emit(o, j, csv);
  return finish(failures);
}

int cmd_sweep(const Options& o) {
  Json j = envelope(o);
  std::vector<Failure> failures;
  Csv csv{{"spec", "q", "d", "s", "a", "mean", "mu_q", "residual", "chi", "applicable", "passed", "all_pass"}, {}};
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    const ScanTotals t = scan(o, spec);
    const MomentReport rep = moment_report(spec, t);
    const auto checks = bound_suite(spec, t);
    std::size_t applicable = 0, passed = 0;
    for (const auto& c : checks) {
      if (!c.applicable) continue;
      ++applicable;
      if (*c.pass)
        ++passed;
      else
        failures.push_back({spec.key() + " " + kind_name(c.kind)});
    }
    std::string chi;
    for (const auto& [r, v] : rep.chi) chi += (chi.empty() ? "" : ";") + std::to_string(r) + ":" + v.get_str();
    csv.rows.push_back({spec.key(), std::to_string(rep.q), std::to_string(rep.d), std::to_string(rep.s),
                        elems_text(spec.a), rational_text(rep.mean), rational_text(rep.mu_q),
                        rational_text(rep.mean_residual), chi, std::to_string(applicable), std::to_string(passed),
                        applicable == passed ? "true" : "false"});
    Json r = to_json(rep);
    r["bounds"] = Json::array();
    for (const auto& c : checks) r["bounds"].push_back(to_json(c));
    j["reports"].push_back(r);
  }
  j["pass"] = failures.empty();
  if (o.out.empty())
    std::cout << csv_text(with_seed(csv, o.seed));
  else
    emit(o, j, csv);
  return finish(failures);
}

AppendixCase parse_case(const std::string& s) {
  for (auto c : {AppendixCase::coprime, AppendixCase::p_divides_d, AppendixCase::p_divides_d_minus_1_even,
                 AppendixCase::p_divides_d_minus_1_odd})
    if (case_name(c) == s) return c;
  if (s == "coprime") return AppendixCase::coprime;
  throw Error(Errc::invalid_argument, "unknown case '" + s + "'");
}

int cmd_appendix(const Options& o) {
  if (o.check != "all" && o.check != "case" && o.check != "subres1")
    throw Error(Errc::invalid_argument, "check must be all, case or subres1");
  Json j = envelope(o);
  std::vector<Failure> failures;
  Csv csv{{"check", "p", "d", "case", "matched", "scalar", "deg_B0", "weighted_homogeneous", "computed"}, {}};
  std::optional<AppendixCase> expected;
  if (!o.expect_case.empty()) expected = parse_case(o.expect_case);
  for (std::uint32_t p : o.p)
    for (std::size_t d : o.d) {
      std::vector<AppendixReport> reps;
      if (o.check != "subres1") reps.push_back(appendix_case_check(p, d, expected));
      if (o.check != "case") reps.push_back(subres1_terms_check(p, d));
      for (const auto& r : reps) {
        j["reports"].push_back(to_json(r));
        if (!r.passed()) failures.push_back({r.check + " p=" + std::to_string(p) + " d=" + std::to_string(d)});
        csv.rows.push_back({r.check, std::to_string(p), std::to_string(d), case_name(r.tag), match_name(r.matched),
                            std::to_string(r.scalar), std::to_string(r.deg_b0),
                            r.weighted_homogeneous ? "true" : "false", to_text(r.computed, r.names)});
      }
    }
  j["pass"] = failures.empty();
  emit(o, j, csv);
  return finish(failures);
}

int cmd_audit_linear(const Options& o) {
  Json j = envelope(o);
  std::vector<Failure> failures;
  Csv csv{{"spec", "g1", "g2", "rank", "count_all", "count_strict", "rank_ok"}, {}};
  for (const auto& inst : instances(o)) {
    const auto& spec = inst.spec;
    std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> pairs;
    if (!o.g1.empty() || !o.g2.empty()) {
      pairs.push_back({parse_elems(*spec.field, o.g1), parse_elems(*spec.field, o.g2)});
    } else {
      // Random disjoint pairs with m, n >= 1 and m + n <= d - s.
      const std::uint32_t q = spec.field->q();
      const std::size_t cap = std::min<std::size_t>(spec.d - spec.s, q);
      if (cap < 2) throw Error(Errc::regime_violation, "need d - s >= 2 for a pair of subsets");
      SplitMix64 rng(o.seed);
      for (std::size_t t = 0; t < std::max<std::size_t>(o.trials, 1); ++t) {
        const std::size_t total = 2 + rng.below(cap - 1);
        const std::size_t m = 1 + rng.below(total - 1);
        std::vector<std::uint32_t> pool(q);
        for (std::uint32_t i = 0; i < q; ++i) pool[i] = i;
        for (std::size_t i = 0; i < total; ++i) std::swap(pool[i], pool[i + rng.below(q - i)]);
        std::vector<Elem> a, b;
        for (std::size_t i = 0; i < total; ++i) (i < m ? a : b).push_back(spec.field->from_index(pool[i]));
        pairs.push_back({a, b});
      }
    }
    for (const auto& [g1, g2] : pairs) {
      const auto audit = linear_system_audit(spec, g1, g2);
      const bool rank_ok = audit.rank == g1.size() + g2.size();
      if (!rank_ok) failures.push_back({spec.key() + " g1=" + elems_text(g1) + " g2=" + elems_text(g2)});
      Json r = to_json(audit);
      r["key"] = spec.key();
      r["g1"] = elems_text(g1);
      r["g2"] = elems_text(g2);
      r["rank_ok"] = rank_ok;
      j["reports"].push_back(r);
      csv.rows.push_back({spec.key(), elems_text(g1), elems_text(g2), std::to_string(audit.rank),
                          audit.count_all.get_str(), audit.count_strict.get_str(), rank_ok ? "true" : "false"});
    }
  }
  j["pass"] = failures.empty();
  emit(o, j, csv);
  return finish(failures);
}

int cmd_merge(const Options& o) {
  if (o.inputs.empty()) throw Error(Errc::missing_parameter, "merge needs input CSV paths");
  const Csv merged = report_merge(o.inputs);
  if (o.out.empty())
    std::cout << csv_text(merged);
  else
    write_text(o.out, csv_text(merged));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value-set experiments for polynomial families over finite fields"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file whose keys are long flag names");
  Options o;
  if (const char* w = std::getenv("VSLAB_WORKERS")) {
    try {
      o.workers = std::stoull(w);
    } catch (...) {
      std::cerr << "VSLAB_WORKERS must be a positive integer\n";
      return 2;
    }
  }
  const std::vector<std::string> commands{"mean",         "second-moment", "chi",      "smn",          "gamma",
                                          "verify-identities", "verify-bounds", "sweep", "appendix", "audit-linear",
                                          "merge"};
  app.add_option("command", o.command, "Command to run")->required()->check(CLI::IsMember(commands));
  app.add_option("inputs", o.inputs, "CSV files (merge)");
  app.add_option("--field", o.field, "Field descriptor, e.g. 7^1 or 9^2/1,0,1");
  app.add_option("--fields", o.fields, "Comma list of field descriptors");
  app.add_option("--d", o.d, "Degree(s)")->delimiter(',');
  app.add_option("--s", o.s, "Number of fixed coefficients")->delimiter(',');
  app.add_option("--a", o.a, "Fixed coefficients: comma list, all, or random:N");
  app.add_option("--seed", o.seed, "Seed for random choices");
  app.add_option("--out", o.out, "Output path (.json or .csv)");
  app.add_option("--workers", o.workers, "Worker threads (default VSLAB_WORKERS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--profile-budget", o.profile_budget, "Max profiles per scan (0 = unlimited)");
  app.add_option("--subset-budget", o.subset_budget, "Max subsets for oracle methods")->check(CLI::PositiveNumber);
  app.add_option("--method", o.method, "profile | subsets (chi) | brute (smn)");
  app.add_option("--mode", o.mode, "Second-moment reconstruction: exact | paper")
      ->check(CLI::IsMember({"exact", "paper"}));
  app.add_option("--r", o.r, "r values")->delimiter(',');
  app.add_option("--m", o.m, "m values")->delimiter(',');
  app.add_option("--n", o.n, "n values")->delimiter(',');
  app.add_option("--p", o.p, "Characteristic(s) for appendix")->delimiter(',');
  app.add_option("--check", o.check, "appendix: all | case | subres1");
  app.add_option("--case", o.expect_case, "appendix: expected case tag");
  app.add_option("--g1", o.g1, "audit-linear: first subset");
  app.add_option("--g2", o.g2, "audit-linear: second subset");
  app.add_option("--trials", o.trials, "audit-linear: random subset pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (o.command == "mean" || o.command == "second-moment") return cmd_moments(o);
    if (o.command == "chi") return cmd_chi(o);
    if (o.command == "smn") return cmd_smn(o);
    if (o.command == "gamma") return cmd_gamma(o);
    if (o.command == "verify-identities") return cmd_verify_identities(o);
    if (o.command == "verify-bounds") return cmd_verify_bounds(o);
    if (o.command == "sweep") return cmd_sweep(o);
    if (o.command == "appendix") return cmd_appendix(o);
    if (o.command == "audit-linear") return cmd_audit_linear(o);
    if (o.command == "merge") return cmd_merge(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
