#include "vslab/bigint.hpp"

namespace vslab {

std::string to_string(const BigRational& r) {
  BigRational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt big_from_u128(unsigned __int128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  BigInt r = BigInt(static_cast<unsigned long>(hi));
  r <<= 64;
  r += BigInt(static_cast<unsigned long>(lo));
  return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt binomial(const BigInt& n, unsigned long k) {
  if (n < 0) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace vslab
