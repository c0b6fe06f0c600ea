#pragma once

#include "areal/rational.hpp"

#include <limits>
#include <string>
#include <vector>

namespace areal {

// Dense univariate polynomial over exact rationals. coefficients()[k] is the
// coefficient of x^k; the vector is empty exactly for the zero polynomial and
// otherwise ends in a nonzero entry.
class Polynomial {
 public:
  // degree() of the zero polynomial. Absorbing under degree_sum.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(long constant);

  static Polynomial variable();  // the monomial x
  static Polynomial from_coefficients(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading_coefficient() const;  // pre: not the zero polynomial
  Rational coefficient(int k) const;            // zero outside the stored range
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;  // zero stays zero

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string str(std::string_view var = "x") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

struct PolyDivMod {
  Polynomial quotient, remainder;
};

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);         // pre: b != 0
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);      // pre: b divides a

/// Degree of a product, honoring the zero-polynomial sentinel.
int degree_sum(int a, int b);

/// Monic greatest common divisor; poly_gcd(0, q) is q made monic.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace areal
