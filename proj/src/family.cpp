#include "vslab/family.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "vslab/error.hpp"

namespace vslab {

FamilySpec FamilySpec::make(FieldPtr field, std::size_t d, std::size_t s, std::vector<Elem> a,
                            SmallFieldPolicy policy) {
  if (!field) throw Error(Errc::invalid_argument, "family without a field");
  if (d < 2) throw Error(Errc::invalid_argument, "family degree must be >= 2");
  if (s + 2 > d) throw Error(Errc::regime_violation, "s must satisfy s <= d-2");
  if (a.size() != s) throw Error(Errc::length_mismatch, "a must have length s");
  for (Elem x : a)
    if (x.v >= field->q()) throw Error(Errc::invalid_argument, "a coefficient outside the field");
  FamilySpec spec;
  spec.small_field = field->q() <= d;
  if (spec.small_field && policy == SmallFieldPolicy::error)
    throw Error(Errc::invalid_argument, "q must exceed d");
  spec.field = std::move(field);
  spec.d = d;
  spec.s = s;
  spec.a = std::move(a);
  return spec;
}

std::uint64_t FamilySpec::b_count() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < free_count(); ++i) {
    if (n > UINT64_MAX / field->q()) throw Error(Errc::budget_exceeded, "b-space does not fit in 64 bits");
    n *= field->q();
  }
  return n;
}

std::string FamilySpec::key() const {
  return "q=" + field->descriptor() + ";d=" + std::to_string(d) + ";s=" + std::to_string(s) + ";a=" + elems_text(a);
}

UniPoly fixed_part(const FamilySpec& spec) {
  std::vector<Elem> c(spec.d + 1, Elem{0});
  c[spec.d] = spec.field->one();
  for (std::size_t i = 0; i < spec.s; ++i) c[spec.d - 1 - i] = spec.a[i];
  return UniPoly(std::move(c));
}

UniPoly family_poly(const FamilySpec& spec, const std::vector<Elem>& b, Elem b0) {
  if (b.size() != spec.free_count()) throw Error(Errc::length_mismatch, "b must have length d-s-1");
  std::vector<Elem> c = fixed_part(spec).coeffs();
  const std::size_t L = b.size();
  for (std::size_t i = 0; i < L; ++i) c[L - i] = b[i];
  c[0] = b0;
  return UniPoly(std::move(c));
}

std::size_t ValueProfile::distinct() const {
  return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto n) { return n > 0; }));
}

ValueProfile value_profile(const FamilySpec& spec, const std::vector<Elem>& b) {
  const UniPoly f = family_poly(spec, b, Elem{0});
  ValueProfile vp;
  vp.counts.assign(spec.field->q(), 0);
  for (std::uint32_t t = 0; t < spec.field->q(); ++t) ++vp.counts[eval(*spec.field, f, Elem{t}).v];
  return vp;
}

std::vector<Elem> b_at(const FamilySpec& spec, std::uint64_t index) {
  const std::uint32_t q = spec.field->q();
  std::vector<Elem> b(spec.free_count());
  for (std::size_t i = b.size(); i-- > 0;) {
    b[i] = Elem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return b;
}

void enumerate_b(const FamilySpec& spec, std::uint64_t begin, std::uint64_t end,
                 const std::function<void(const std::vector<Elem>&)>& fn) {
  if (begin >= end) return;
  const std::uint32_t q = spec.field->q();
  std::vector<Elem> b = b_at(spec, begin);
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(b);
    for (std::size_t j = b.size(); j-- > 0;) {
      if (++b[j].v < q) break;
      b[j].v = 0;
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, std::size_t parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (total == 0) return out;
  parts = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(parts, total)));
  for (std::size_t i = 0; i < parts; ++i) out.emplace_back(total * i / parts, total * (i + 1) / parts);
  return out;
}

std::vector<Elem> parse_elems(const Field& f, const std::string& text) {
  std::vector<Elem> out;
  if (text.empty()) return out;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::parse_error, "bad element list '" + text + "'");
    out.push_back(f.from_index(v));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::string elems_text(const std::vector<Elem>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].v;
  return os.str();
}

}  // namespace vslab
