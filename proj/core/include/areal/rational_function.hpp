#pragma once

#include "areal/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace areal {

// Quotient of polynomials with a monic denominator. Numerator and
// denominator are kept as constructed (no gcd cancellation): degree claims
// about coordinate functions refer to this uncancelled representation.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}

  RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    Rational inv = Rational(1) / den.leading_coefficient();
    num_ = inv * num;
    den_ = inv * den;
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  int numerator_degree() const { return num_.degree(); }
  int denominator_degree() const { return den_.degree(); }
  int max_degree() const { return std::max(num_.degree(), den_.degree()); }

  std::optional<Rational> operator()(const Rational& x) const {
    Rational d = den_(x);
    if (sign(d) == 0) return std::nullopt;
    return num_(x) / d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  Polynomial num_, den_;
};

}  // namespace areal
