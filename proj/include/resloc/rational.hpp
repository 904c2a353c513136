#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace resloc {

// Arbitrary-precision rational, always kept in canonical form by GMP.
using Rat = mpq_class;
using Int = mpz_class;

// Canonicalizing constructor; mpq_class(num, den) does not reduce.
Rat make_rat(const Int& num, const Int& den);

// Canonical text form: "p/q", or "p" when q == 1. Never decimal.
std::string to_string(const Rat& x);

// Parses "p", "-p" or "p/q". Throws Error(InvalidArgument) otherwise.
Rat parse_rat(std::string_view text);

Int binomial(long n, long k);
// binom(n, k) for any integer n (negative upper index allowed), k >= 0.
Int binomial_signed(long n, long k);
Int factorial(long n);

}  // namespace resloc
