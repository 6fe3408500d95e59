#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace vslab {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "num/den" with den omitted when it is 1.
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& n);

BigInt big_from_u128(unsigned __int128 v);
BigInt ipow(const BigInt& base, unsigned long e);
BigInt binomial(const BigInt& n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace vslab
