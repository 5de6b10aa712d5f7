#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sectorlen {

using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient with zero extension: C(a,b) = 0 whenever a < 0,
/// b < 0, or b > a.
Int binomial(long a, long b);

/// Canonicalized fraction num/den (the raw two-argument mpq_class
/// constructor does not reduce).
Rat frac(const Int& num, const Int& den);

Int pow_int(const Int& base, unsigned long exp);

/// log2 of a positive integer, good to double precision even when the
/// integer itself overflows a double.
double log2_int(const Int& x);

double to_double(const Rat& x);

/// Renders "p" for integers and "p/q" otherwise.
std::string rat_to_string(const Rat& x);

/// Accepts "p", "p/q", or a decimal literal such as "0.25".
Rat rat_from_string(const std::string& s);

/// Exact dyadic value of a finite double.
Rat rat_from_double(double x);

bool is_prime(int d);

}  // namespace sectorlen
