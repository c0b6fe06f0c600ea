#include "areal/polynomial.hpp"
#include "areal/rational.hpp"
#include "areal/rational_function.hpp"
#include "areal/sturm.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <random>

using namespace areal;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial::from_coefficients(std::move(c));
}

const Polynomial x = Polynomial::variable();

}  // namespace

TEST_CASE("rational parsing covers integers, fractions, decimals, scientific") {
  CHECK(*parse_rational("7") == Rational(7));
  CHECK(*parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(*parse_rational("0.25") == make_rational(1, 4));
  CHECK(*parse_rational("-3.5") == make_rational(-7, 2));
  CHECK(*parse_rational("1e-9") == make_rational(1, 1000000000));
  CHECK(*parse_rational("2.5e-3") == make_rational(1, 400));
  CHECK(*parse_rational("12e2") == Rational(1200));
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("x"));
  CHECK(!parse_rational("1.2.3"));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("polynomial arithmetic and degree sentinel") {
  Polynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == Polynomial::kZeroDegree);
  CHECK(degree_sum(Polynomial::kZeroDegree, 5) == Polynomial::kZeroDegree);
  CHECK(degree_sum(2, 3) == 5);

  Polynomial p = poly({-1, 0, 1});  // x^2 - 1
  Polynomial q = poly({-1, 1});     // x - 1
  CHECK((p + q).degree() == 2);
  CHECK((p * q).degree() == 3);
  CHECK((q * q) == poly({1, -2, 1}));
  CHECK((p - p).is_zero());
  CHECK(p(Rational(3)) == Rational(8));
  CHECK(p.derivative() == poly({0, 2}));
  CHECK((Rational(0) * p).is_zero());

  // divmod: a = q*b + r with deg r < deg b, on random inputs.
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rational> ac, bc;
    for (int k = 0; k <= static_cast<int>(rng() % 7); ++k) ac.push_back(oracle::small_rational(rng));
    for (int k = 0; k <= static_cast<int>(rng() % 4); ++k) bc.push_back(oracle::small_rational(rng));
    Polynomial a = Polynomial::from_coefficients(ac);
    Polynomial b = Polynomial::from_coefficients(bc);
    if (b.is_zero()) continue;
    PolyDivMod dm = poly_divmod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder.degree() < b.degree());
  }
}

TEST_CASE("poly_gcd frozen examples") {
  // shared factor by construction
  CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  // gcd with zero: monic normalization of 3x + 3
  CHECK(poly_gcd(Polynomial(), poly({3, 3})) == poly({1, 1}));
  // one Euclidean step by hand: x^2+1 = (x+2)(x-2) + 5, then gcd(x+2, 5) = 1
  CHECK(poly_gcd(poly({1, 0, 1}), poly({2, 1})) == Polynomial(Rational(1)));
}

TEST_CASE("poly_gcd picks up planted common factors") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    std::vector<Rational> pc, qc, gc;
    for (int k = 0; k <= 3; ++k) pc.push_back(oracle::small_rational(rng));
    for (int k = 0; k <= 3; ++k) qc.push_back(oracle::small_rational(rng));
    for (int k = 0; k <= 2; ++k) gc.push_back(oracle::small_rational(rng));
    Polynomial p = Polynomial::from_coefficients(pc);
    Polynomial q = Polynomial::from_coefficients(qc);
    Polynomial g = Polynomial::from_coefficients(gc);
    if (p.is_zero() || q.is_zero() || g.degree() < 1) continue;
    if (poly_gcd(p, q).degree() != 0) continue;  // want coprime p, q
    Polynomial d = poly_gcd(p * g, q * g);
    // d must be divisible by g (and, p and q being coprime, equals monic g).
    CHECK(poly_divmod(d, g).remainder.is_zero());
    CHECK(d == g.monic());
  }
}

TEST_CASE("sturm_count frozen examples") {
  // x^2 - 2 on (0, 2]: the sign-scan oracle at step 1/1000 sees one root.
  Polynomial p = poly({-2, 0, 1});
  Interval iv(Rational(0), Rational(2));
  CHECK(oracle::sign_scan_count(p, iv, make_rational(1, 1000)) == 1);
  CHECK(sturm_count(p, iv) == 1);
  // x^2 + 1: negative discriminant
  CHECK(sturm_count(poly({1, 0, 1}), Interval(Rational(-10), Rational(10))) == 0);
  // (x-1)^2 on (0, 2]: one distinct root; oracle on the square-free part
  CHECK(oracle::sign_scan_count(poly({-1, 1}), iv, make_rational(1, 1000)) == 1);
  CHECK(sturm_count(poly({1, -2, 1}), iv) == 1);
  // half-open convention: root at the left endpoint is excluded
  CHECK(sturm_count(poly({0, 1}), Interval(Rational(0), Rational(1))) == 0);
  CHECK(sturm_count(poly({0, 1}), Interval(Rational(-1), Rational(0))) == 1);
}

TEST_CASE("sturm_count equals the sign-scan oracle on separated square-free inputs") {
  std::mt19937_64 rng(5);
  const Rational step = make_rational(1, 1000);
  for (int it = 0; it < 200; ++it) {
    Polynomial p = oracle::random_separated_squarefree(rng);
    Interval iv(Rational(-5), Rational(5));
    CHECK(sturm_count(p, iv) == oracle::sign_scan_count(p, iv, step));
  }
}

TEST_CASE("isolate_real_roots frozen examples") {
  // x^2 - 2: one interval inside (-2, -1], one inside (1, 2]
  auto ivs = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].lo >= Rational(-2));
  CHECK(ivs[0].hi <= Rational(-1));
  CHECK(ivs[1].lo >= Rational(1));
  CHECK(ivs[1].hi <= Rational(2));
  // x + 5: one interval containing -5
  auto one = isolate_real_roots(poly({5, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo < Rational(-5));
  CHECK(Rational(-5) <= one[0].hi);
  // x^2 + 1: no real roots
  CHECK(isolate_real_roots(poly({1, 0, 1})).empty());
}

TEST_CASE("isolate_real_roots properties on random polynomials") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 80; ++it) {
    Polynomial p = oracle::random_separated_squarefree(rng);
    auto ivs = isolate_real_roots(p);
    SturmChain chain(p);
    int total = chain.count_all();
    CHECK(static_cast<int>(ivs.size()) == total);
    for (std::size_t k = 0; k < ivs.size(); ++k) {
      CHECK(sturm_count(p, ivs[k]) == 1);
      if (k + 1 < ivs.size()) CHECK(ivs[k].hi <= ivs[k + 1].lo);
    }
  }
}

TEST_CASE("refine_root frozen examples") {
  // sqrt(2) against a high-precision reference
  Polynomial p = poly({-2, 0, 1});
  Interval iv(Rational(1), Rational(2));
  Rational tol = make_rational(1, 1000000);
  Rational r = refine_root(p, iv, tol);
  Rational sqrt2 = *parse_rational("1.41421356237309504880168872420969807856967187537694");
  CHECK(abs(r - sqrt2) <= tol + make_rational(1, Integer("100000000000000000000")));

  // exact hit: x - 3 on (2, 4] bisects straight onto 3
  CHECK(refine_root(poly({-3, 1}), Interval(Rational(2), Rational(4)), tol) == Rational(3));

  // x^3 - x on (1/2, 3/2]: the isolated root is 1
  Rational r2 = refine_root(poly({0, -1, 0, 1}), Interval(make_rational(1, 2), make_rational(3, 2)),
                            make_rational(1, 1000000000));
  CHECK(abs(r2 - Rational(1)) <= make_rational(1, 1000000000));

  // an interval that does not isolate a root is rejected
  CHECK_THROWS_AS(refine_root(poly({-2, 0, 1}), Interval(Rational(3), Rational(4)), tol),
                  std::invalid_argument);
  CHECK_THROWS_AS(refine_root(poly({-2, 0, 1}), Interval(Rational(-2), Rational(2)), tol),
                  std::invalid_argument);
}

TEST_CASE("has_common_real_root frozen examples") {
  Polynomial a = poly({-1, 0, 1});  // (x-1)(x+1)
  Polynomial b = poly({0, -1, 1});  // x(x-1): shared root 1
  CHECK(has_common_real_root(a, b));
  CHECK(!has_common_real_root(poly({1, 0, 1}), poly({7, 1})));
  // gcd x^2+1 has no real root
  CHECK(!has_common_real_root(poly({1, 0, 1}), poly({0, 1}) * poly({1, 0, 1})));
  CHECK_THROWS_AS(has_common_real_root(Polynomial(), poly({1, 1})), std::invalid_argument);
}

TEST_CASE("rational function normalization") {
  RationalFunction f(poly({1, 2}), poly({0, 0, 3}));
  CHECK(f.denominator().leading_coefficient() == Rational(1));
  CHECK(f.denominator() == poly({0, 0, 1}));
  CHECK(f.numerator() == Polynomial::from_coefficients({make_rational(1, 3), make_rational(2, 3)}));
  CHECK(f.max_degree() == 2);
  CHECK(!f(Rational(0)).has_value());
  CHECK(*f(Rational(1)) == Rational(1));
  CHECK_THROWS_AS(RationalFunction(poly({1}), Polynomial()), std::invalid_argument);

  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    std::vector<Rational> nc, dc;
    for (int k = 0; k <= static_cast<int>(rng() % 5); ++k) nc.push_back(oracle::small_rational(rng));
    for (int k = 0; k <= static_cast<int>(rng() % 5); ++k) dc.push_back(oracle::small_rational(rng));
    Polynomial den = Polynomial::from_coefficients(dc);
    if (den.is_zero()) continue;
    RationalFunction g(Polynomial::from_coefficients(nc), den);
    CHECK(!g.denominator().is_zero());
    CHECK(g.denominator().leading_coefficient() == Rational(1));
  }
}
