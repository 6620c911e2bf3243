#pragma once

#include <gmpxx.h>

#include <string>

namespace linext {

using big_int = mpz_class;

// Always kept canonical: reduced, positive denominator.
using fraction = mpq_class;

inline int sign_of(const big_int& z) { return sgn(z); }
inline int sign_of(const fraction& q) { return sgn(q); }

// "p/q", or just "p" when the denominator is 1.
std::string fraction_string(const fraction& q);

// Accepts "p" and "p/q"; canonicalizes. Throws parse_error on junk.
fraction parse_fraction(const std::string& text);

// Fixed-point rendering with round-half-even at `digits` places after the
// point (digits == 0 renders an integer). Never emits "-0.00...".
std::string decimal_string(const fraction& q, int digits);

// Renders n * 10^-digits in fixed point.
std::string format_scaled_integer(const big_int& n, int digits);

big_int pow10(int digits);

}  // namespace linext
