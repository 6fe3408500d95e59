#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vslab/appendix.hpp"
#include "vslab/bounds.hpp"
#include "vslab/counting.hpp"
#include "vslab/moments.hpp"

namespace vslab {

using Json = nlohmann::ordered_json;

/// SplitMix64: the i-th output depends only on (seed, i), so streams split by index.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  static std::uint64_t at(std::uint64_t seed, std::uint64_t i);
  /// Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// `count` distinct a-vectors of length s drawn with SplitMix64(seed); all of
/// F_q^s (in index order) when count >= q^s.
std::vector<std::vector<Elem>> random_a(const FieldPtr& f, std::size_t s, std::size_t count, std::uint64_t seed);
/// Every a in F_q^s, first component most significant.
std::vector<std::vector<Elem>> all_a(const FieldPtr& f, std::size_t s);

/// Always "num/den", den >= 1.
std::string rational_text(const BigRational& r);
/// printf "%.17g"
std::string float_text(double x);

Json to_json(const ChiVector& chi);
Json to_json(const SMatrix& S);
Json to_json(const MomentReport& r);
Json to_json(const BoundCheck& c);
Json to_json(const AppendixReport& r);
Json to_json(const LinearAudit& a);

/// Deterministic rendering: two-space indent, trailing newline.
std::string dump(const Json& j);

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 quoting where needed; LF line ends.
std::string csv_text(const Csv& c);
Csv parse_csv(const std::string& text);
Csv read_csv(const std::string& path);
void write_text(const std::string& path, const std::string& text);

Csv moment_csv(const std::vector<MomentReport>& reports);
Csv chi_csv(const std::vector<MomentReport>& reports, const std::vector<std::vector<BoundCheck>>& checks);
Csv bound_csv(const std::vector<BoundCheck>& checks);

/// Concatenates with one header; rows stably sorted by spec key then the
/// parameter columns present (q, d, s, r, m, n). Duplicates are kept.
/// SchemaMismatch when headers differ.
Csv report_merge(const std::vector<Csv>& inputs);
Csv report_merge(const std::vector<std::string>& paths);

}  // namespace vslab
