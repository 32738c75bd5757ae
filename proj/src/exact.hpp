#pragma once
// Exact arithmetic layer: arbitrary-precision integers and rationals (GMP
// backed), "p/q" parsing/printing, rounding helpers, and exact decimal
// rendering for report columns. Every quantity the toolkit reports as exact
// flows through these types; doubles appear only at reporting boundaries.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace shc {

using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to lowest terms with positive denominator.
// Throws std::invalid_argument when den == 0.
Rat make_rat(const Int& num, const Int& den);

bool rat_is_integer(const Rat& r);

// Largest integer <= r, smallest integer >= r.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// Nearest integer with exact halves rounded up: floor(r + 1/2).
Int rat_round_half_up(const Rat& r);

// "p" when integral, otherwise "p/q" in lowest terms with q > 0.
std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q" (optional leading '-', decimal digits only).
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Exact decimal rendering with the given number of significant digits
// (half-up rounding), fixed-point notation, trailing zeros trimmed.
std::string rat_to_decimal(const Rat& r, int significant);

// Decimal rendering of sqrt(r) for r >= 0, same conventions as above.
// Integer square roots keep the rounding decision exact end to end.
std::string rat_sqrt_to_decimal(const Rat& r, int significant);

double rat_to_double(const Rat& r);

// r^e for a non-negative integer exponent.
Rat rat_pow(const Rat& r, unsigned long e);

// Checked narrowing to a machine integer; throws std::invalid_argument
// when the value does not fit.
long int_to_long(const Int& v);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
Int pow10(unsigned long k);

}  // namespace shc
