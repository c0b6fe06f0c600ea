#pragma once

#include "areal/polynomial.hpp"

#include <vector>

namespace areal {

// Half-open interval (lo, hi].
struct Interval {
  Rational lo, hi;
  Interval(Rational l, Rational h);
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

// Canonical Sturm chain: p, p', then negated polynomial remainders. Counts
// distinct real roots over half-open intervals; evaluation points landing on
// a root are handled by dropping zero entries from the variation count (the
// count is right-continuous).
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);  // pre: p not the zero polynomial
  int variations(const Rational& x) const;
  int count(const Interval& iv) const;
  int count_all() const;  // over (-bound, bound], covering every real root
  const Rational& bound() const { return bound_; }

 private:
  std::vector<Polynomial> chain_;
  Rational bound_;
};

/// Cauchy bound 1 + max |c_i / c_deg|; every real root lies strictly inside
/// (-bound, bound).
Rational root_bound(const Polynomial& p);

/// Number of distinct real roots of p in (lo, hi]. pre: p != 0.
int sturm_count(const Polynomial& p, const Interval& iv);

/// Pairwise disjoint intervals, each containing exactly one distinct real
/// root of p, jointly covering all of them, each of width <= 1/2, sorted by
/// position. pre: p != 0.
std::vector<Interval> isolate_real_roots(const Polynomial& p);

/// Bisection with exact sign decisions on the square-free part. Returns r
/// with |r - root| <= tol; a bisection point that hits the root exactly is
/// returned as-is. Throws std::invalid_argument if iv does not isolate
/// exactly one real root of p or tol <= 0.
Rational refine_root(const Polynomial& p, const Interval& iv, const Rational& tol);

/// True iff gcd(p, q) has at least one real root. pre: neither is zero.
bool has_common_real_root(const Polynomial& p, const Polynomial& q);

}  // namespace areal
