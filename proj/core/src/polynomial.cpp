#include "areal/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace areal {

Polynomial::Polynomial(Rational constant) {
  if (sign(constant) != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial Polynomial::variable() {
  Polynomial p;
  p.coeffs_ = {Rational(0), Rational(1)};
  return p;
}

Polynomial Polynomial::from_coefficients(std::vector<Rational> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  p.strip();
  return p;
}

void Polynomial::strip() {
  while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading_coefficient() const {
  if (is_zero()) throw std::logic_error("leading_coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return from_coefficients(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = Rational(1) / leading_coefficient();
  return inv * *this;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial::from_coefficients(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial::from_coefficients(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sign(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial::from_coefficients(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (sign(c) == 0) return Polynomial();
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = c * p.coeffs_[k];
  return Polynomial::from_coefficients(std::move(out));
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return PolyDivMod{Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational& lead = b.leading_coefficient();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational factor = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    if (sign(factor) != 0) {
      quot[static_cast<std::size_t>(k)] = factor;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] -= factor * b.coefficient(j);
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
  return {Polynomial::from_coefficients(std::move(quot)), Polynomial::from_coefficients(std::move(rem))};
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  PolyDivMod dm = poly_divmod(a, b);
  if (!dm.remainder.is_zero()) throw std::logic_error("poly_div_exact: division is not exact");
  return dm.quotient;
}

std::string Polynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coefficient(k);
    if (sign(c) == 0) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    if (first && sign(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || k == 0) os << to_string(a) << (k > 0 ? "*" : "");
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

int degree_sum(int a, int b) {
  if (a == Polynomial::kZeroDegree || b == Polynomial::kZeroDegree) return Polynomial::kZeroDegree;
  return a + b;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  // Keep remainders monic along the way so coefficients stay small.
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? Polynomial() : r.monic();
  }
  return a;
}

}  // namespace areal
