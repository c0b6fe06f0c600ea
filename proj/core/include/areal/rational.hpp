#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace areal {

// Exact arbitrary-precision rational. mpq_class keeps the invariants we
// rely on everywhere: positive denominator, fully reduced after every
// operation (once canonicalized).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "p/q", decimals ("0.25", "-3.5") and scientific notation
/// ("1e-9", "2.5e-3") into an exact rational.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact textual form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace areal
