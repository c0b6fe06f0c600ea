#include "areal/symbolic.hpp"

#include "areal/area_assignment.hpp"
#include "areal/generators.hpp"
#include "areal/porder.hpp"
#include "areal/sturm.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <random>

using namespace areal;

namespace {

AreaAssignment simple_areas(const PlaneTriangulation& t, long salt = 0) {
  // Distinct, mildly irregular positive rationals.
  std::vector<Rational> vals;
  for (std::size_t k = 0; k < t.inner_faces.size(); ++k)
    vals.push_back(make_rational(static_cast<long>(2 * k + 3) + salt, static_cast<long>(k + 2)));
  return AreaAssignment::make(std::move(vals));
}

struct Built {
  PlaneTriangulation t;
  POrder po;
  AreaAssignment a;
  SymbolicPlacement pl;
};

Built build_accordion(int l, const AreaAssignment* areas = nullptr) {
  Built b{accordion(l), {}, AreaAssignment::make({Rational(1)}), {}};
  b.po = porder_from_order(b.t, accordion_order(l), accordion_unoriented_edge(l));
  b.a = areas ? *areas : simple_areas(b.t);
  b.pl = build_placement(b.t, b.po, b.a);
  return b;
}

Built build_ds(int l, int k) {
  Built b{double_stacking(l, k), {}, AreaAssignment::make({Rational(1)}), {}};
  b.po = porder_from_order(b.t, double_stacking_order(l, k), double_stacking_unoriented_edge(l, k));
  b.a = simple_areas(b.t);
  b.pl = build_placement(b.t, b.po, b.a);
  return b;
}

// Exhaustive area-equation check at a concrete coordinate: every face
// equation named by the order holds exactly at any admissible value.
void check_aeq_at(const Built& b, const Rational& x) {
  for (const Polynomial& d : b.pl.excluded)
    if (sign(d(x)) == 0) return;  // excluded value, nothing to check
  auto pos = [&](int v) { return *b.pl.evaluate(v, x); };
  {
    const FaceTriple& f0 = b.t.face(b.po.face0);
    CHECK(det3(pos(f0[0]), pos(f0[1]), pos(f0[2])) == b.a.signed_value(b.t, b.po.face0));
    const FaceTriple& f4 = b.t.face(b.po.face_base4);
    CHECK(det3(pos(f4[0]), pos(f4[1]), pos(f4[2])) == b.a.signed_value(b.t, b.po.face_base4));
  }
  for (const ConstructionStep& st : b.po.steps) {
    const FaceTriple& fa = b.t.face(st.face_a);
    const FaceTriple& fb = b.t.face(st.face_b);
    CHECK(det3(pos(fa[0]), pos(fa[1]), pos(fa[2])) == b.a.signed_value(b.t, st.face_a));
    CHECK(det3(pos(fb[0]), pos(fb[1]), pos(fb[2])) == b.a.signed_value(b.t, st.face_b));
  }
  // The last-face function reproduces the determinant of the analysis face.
  const FaceTriple& fa = b.t.face(b.po.face_a);
  CHECK(*b.pl.last_face(x) == det3(pos(fa[0]), pos(fa[1]), pos(fa[2])));
}

}  // namespace

TEST_CASE("base placement pins the first four vertices") {
  Built b = build_accordion(1);
  // The face on v1 v2 v3 is the outer face here, so y3 is the total area.
  CHECK(b.t.is_outer(b.po.face0));
  const VertexFunctions& v3 = b.pl.coords[static_cast<std::size_t>(b.po.vertex_at(3))];
  CHECK(v3.nx == Polynomial(Rational(1)));
  CHECK(v3.ny == Polynomial(b.a.total));
  CHECK(v3.den == Polynomial(Rational(1)));
  const VertexFunctions& v4 = b.pl.coords[static_cast<std::size_t>(b.po.vertex_at(4))];
  CHECK(v4.nx == Polynomial::variable());
  CHECK(v4.ny == Polynomial(b.a.signed_value(b.t, b.po.face_base4)));
  // The face v1 v2 v4 is realized identically in the free coordinate.
  RationalFunction base = face_determinant(b.t, b.pl.coords, b.po.face_base4);
  CHECK(base.numerator() == Polynomial(b.a.signed_value(b.t, b.po.face_base4)));
  CHECK(base.denominator() == Polynomial(Rational(1)));
}

TEST_CASE("fifth vertex: degrees, split, and the closed coordinate form") {
  Built b = build_accordion(2);
  const StepFunctions& s5 = b.pl.steps.front();
  const VertexFunctions& v5 = b.pl.coords[static_cast<std::size_t>(s5.vertex)];
  CHECK(v5.nx.degree() == 1);
  CHECK(v5.den.degree() == 1);
  CHECK(v5.ny.degree() == 0);
  // The middle predecessor sits at denominator 1, so e matches the full
  // denominator and f is constant.
  CHECK(s5.e == v5.den);
  CHECK(s5.f.degree() == 0);

  // Closed form x5 = (a5 x + b5 x3) / (y3 x - a x3) with x3 = 1.
  Rational y3 = -b.a.signed_value(b.t, b.po.face0);
  Rational a4 = b.a.signed_value(b.t, b.po.face_base4);
  Rational a5 = b.a.signed_value(b.t, b.po.steps.front().face_a);
  Rational b5 = b.a.signed_value(b.t, b.po.steps.front().face_b);
  for (const Rational& x : {make_rational(7, 3), make_rational(-2, 5)}) {
    Rational den = y3 * x - a4;
    if (sign(den) == 0) continue;
    Point p = *b.pl.evaluate(s5.vertex, x);
    CHECK(p.x == (a5 * x + b5) / den);
    CHECK(p.y == (a4 * a5 + b5 * y3) / den);
  }
}

TEST_CASE("placements satisfy every named area equation exactly") {
  for (Built b : {build_accordion(1), build_accordion(3), build_ds(2, 2), build_ds(3, 2)}) {
    for (const Rational& x :
         {make_rational(17, 5), make_rational(-3, 7), Rational(2), make_rational(355, 113)})
      check_aeq_at(b, x);
  }
  // Also on a searched (non-canonical) order of the octahedron.
  PlaneTriangulation oct = octahedron();
  auto po = find_porder(oct);
  REQUIRE(po.has_value());
  Built b{oct, *po, simple_areas(oct), {}};
  b.pl = build_placement(b.t, b.po, b.a);
  for (const Rational& x : {make_rational(17, 5), make_rational(-3, 7)}) check_aeq_at(b, x);
}

TEST_CASE("degree bookkeeping identity holds on every step") {
  for (Built b : {build_accordion(4), build_ds(3, 3)}) {
    for (std::size_t k = 0; k < b.pl.steps.size(); ++k) {
      const StepFunctions& st = b.pl.steps[k];
      const ConstructionStep& cs = b.po.steps[k];
      const Polynomial& den = b.pl.coords[static_cast<std::size_t>(cs.vertex)].den;
      const Polynomial& dm = b.pl.coords[static_cast<std::size_t>(cs.pm)].den;
      CHECK(den.degree() == degree_sum(dm.degree(), st.e.degree()));
      CHECK(den.degree() == degree_sum(st.dtilde.degree(), st.f.degree()));
      CHECK(den == dm * st.e);
      CHECK(den == st.dtilde * st.f);
      // e and f share no root at all (they are coprime by construction).
      CHECK(poly_gcd(st.e, st.f).degree() == 0);
    }
  }
}

TEST_CASE("accordion chain: e-polynomials walk down by the step areas") {
  Built b = build_accordion(4);
  Rational total = b.a.total;
  Rational alpha = b.a.signed_value(b.t, b.po.face_base4);
  for (std::size_t k = 0; k < b.pl.steps.size(); ++k) {
    const StepFunctions& st = b.pl.steps[k];
    Polynomial expected =
        Polynomial::from_coefficients({-alpha, total});  // total * x - alpha
    CHECK(st.e == expected.monic());
    alpha += b.a.signed_value(b.t, b.po.steps[k].face_a) +
             b.a.signed_value(b.t, b.po.steps[k].face_b);
  }
}

TEST_CASE("same-angle stacking recurrence for the split polynomials") {
  // In the canonical double-stacking order, consecutive vertices of each
  // chain share their first and last predecessors.
  Built b = build_ds(3, 3);
  for (std::size_t k = 1; k < b.po.steps.size(); ++k) {
    const ConstructionStep& prev = b.po.steps[k - 1];
    const ConstructionStep& cur = b.po.steps[k];
    bool same_angle = prev.pf == cur.pf && prev.pl == cur.pl && cur.pm == prev.vertex;
    if (!same_angle) continue;
    const StepFunctions& sp = b.pl.steps[k - 1];
    const StepFunctions& sc = b.pl.steps[k];
    // The chain steps down by the areas consumed at the *previous* vertex.
    Rational ab = b.a.signed_value(b.t, prev.face_a) + b.a.signed_value(b.t, prev.face_b);
    const Polynomial& df = b.pl.coords[static_cast<std::size_t>(cur.pf)].den;
    const Polynomial& dl = b.pl.coords[static_cast<std::size_t>(cur.pl)].den;
    Polynomial rhs = sp.e - (ab * (df * dl * sp.f));
    CHECK(sc.e == rhs.monic());
    CHECK(sc.f.degree() == sp.f.degree());
    // Degree offsets repeat along the chain.
    auto dvert = [&](int v, bool xcoord) {
      const VertexFunctions& vf = b.pl.coords[static_cast<std::size_t>(v)];
      return (xcoord ? vf.nx.degree() : vf.ny.degree()) - vf.den.degree();
    };
    CHECK(dvert(cur.vertex, true) == dvert(prev.vertex, true));
    CHECK(dvert(cur.vertex, false) == dvert(prev.vertex, false));
  }
}

TEST_CASE("accordion coordinate degrees and crr, small orders") {
  std::mt19937_64 rng(99);
  for (int l = 0; l <= 4; ++l) {
    PlaneTriangulation t = accordion(l);
    POrder po = porder_from_order(t, accordion_order(l), accordion_unoriented_edge(l));
    AreaAssignment a = sample_generic(t, rng);
    SymbolicPlacement pl = build_placement(t, po, a);
    for (int i = 5; i <= t.n; ++i) {
      const VertexFunctions& vf = pl.coords[static_cast<std::size_t>(po.vertex_at(i))];
      CHECK(vf.nx.degree() == i - 4);
      CHECK(vf.den.degree() == i - 4);
      CHECK(vf.ny.degree() == i - 5);
      CHECK(!has_common_real_root(vf.nx, vf.den));
      CHECK(!has_common_real_root(vf.ny, vf.den));
    }
  }
}

TEST_CASE("last-face function of the accordion") {
  Built b = build_accordion(1);
  int vn = b.po.order.back();
  const VertexFunctions& last = b.pl.coords[static_cast<std::size_t>(vn)];
  // f = total * (1 - x_n): numerator total * (den - nx) over den.
  CHECK(b.pl.last_face.denominator() == last.den);
  CHECK(b.pl.last_face.numerator() == b.a.total * (last.den - last.nx));
  CHECK(b.pl.last_face.numerator_degree() == 3);
  CHECK(b.pl.last_face.denominator_degree() == 3);
}

TEST_CASE("double-stacking last-face degrees follow the product rule") {
  for (int l = 1; l <= 3; ++l)
    for (int k = 1; k <= 3; ++k) {
      Built b = build_ds(l, k);
      CHECK(b.pl.last_face.numerator_degree() == k * l + 1);
      CHECK(b.pl.last_face.denominator_degree() == k * l);
    }
}

namespace {

// Icosahedron: every degree is 5, so removing one edge never leaves a
// 3-degenerate graph and no predecessor order exists.
PlaneTriangulation icosahedron() {
  PlaneTriangulation t;
  t.n = 12;
  // apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
  for (int i = 0; i < 5; ++i) {
    int p0 = 1 + i, p1 = 1 + (i + 1) % 5;
    int q0 = 6 + i, q1 = 6 + (i + 1) % 5;
    t.inner_faces.push_back({0, p0, p1});
    t.inner_faces.push_back({p0, q0, p1});
    t.inner_faces.push_back({q0, q1, p1});
    if (i > 0) t.inner_faces.push_back({q1, q0, 11});
  }
  t.outer_face = {7, 6, 11};
  return t;
}

}  // namespace

TEST_CASE("analyze verdicts on the named graphs") {
  CHECK(analyze(accordion(1)).verdict == Verdict::AreaUniversal);
  CHECK(analyze(accordion(2)).verdict == Verdict::NotAreaUniversalEulerian);
  CHECK(analyze(octahedron()).verdict == Verdict::NotAreaUniversalEulerian);
  CHECK(analyze(k4()).verdict == Verdict::AreaUniversal);
  CHECK(analyze(double_stacking(2, 2)).verdict == Verdict::AreaUniversal);

  AnalysisReport r = analyze(accordion(1));
  REQUIRE(r.porder.has_value());
  CHECK(r.crr);
  CHECK(r.odd_max_degree);
  CHECK(r.numerator_degree == 3);
  CHECK(r.denominator_degree == 3);
  CHECK(r.samples_used >= 3);

  PlaneTriangulation k3;
  k3.n = 3;
  k3.inner_faces = {{0, 1, 2}};
  k3.outer_face = {0, 2, 1};
  CHECK(analyze(k3).verdict == Verdict::AreaUniversal);

  // K4: the analysis face depends on the free coordinate only linearly.
  AnalysisReport rk4 = analyze(k4());
  CHECK(rk4.verdict == Verdict::AreaUniversal);
  CHECK(rk4.numerator_degree == 1);
  CHECK(rk4.denominator_degree == 0);

  // No predecessor order at all.
  PlaneTriangulation ico = icosahedron();
  REQUIRE(validate(ico).empty());
  CHECK(is_four_connected(ico));
  CHECK(!is_eulerian(ico));
  AnalysisReport rico = analyze(ico);
  CHECK(rico.verdict == Verdict::NoPOrder);
  CHECK(rico.candidates_tried == 0);
}

TEST_CASE("degrees are stable across seeds and sample counts") {
  for (std::uint64_t seed : {1ull, 7ull, 1234567ull}) {
    AnalysisReport r = analyze(accordion(3), 3, seed);
    CHECK(r.verdict == Verdict::AreaUniversal);
    CHECK(r.numerator_degree == 5);
    CHECK(r.denominator_degree == 5);
  }
  AnalysisReport r5 = analyze(accordion(3), 5, 99);
  CHECK(r5.verdict == Verdict::AreaUniversal);
}
