#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cylspec {

// Exact arithmetic for multiplicities and rational spectrum values.
// C(N, N/2) overflows 64-bit integers near N = 67; everything that counts
// eigenvalues is arbitrary precision.
using BigInt = mpz_class;
using Rational = mpq_class;

// Canonicalized rational from a (num, den) pair. den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

// Full row {C(n,0), ..., C(n,n)} via the multiplicative recurrence
// C(n,j+1) = C(n,j)*(n-j)/(j+1). Exact at any n.
std::vector<BigInt> binomial_row(unsigned n);

// 2^n as an exact integer.
BigInt pow2(unsigned n);

// num/den as the nearest double; handles magnitudes far outside the
// native float range.
double ratio_as_double(const BigInt& num, const BigInt& den);

std::string bigint_to_string(const BigInt& v);

// Parses a decimal integer string; rejects anything else.
BigInt bigint_from_string(const std::string& text);

// Accepts "p", "-p", or "p/q"; result is canonical.
Rational rational_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& v);

}  // namespace cylspec
