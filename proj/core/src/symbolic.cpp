#include "areal/symbolic.hpp"

#include "areal/sturm.hpp"

#include <algorithm>
#include <random>

namespace areal {

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  return (a * poly_div_exact(b, poly_gcd(a, b))).monic();
}

}  // namespace

std::optional<Point> SymbolicPlacement::evaluate(int vertex, const Rational& x) const {
  const VertexFunctions& vf = coords[static_cast<std::size_t>(vertex)];
  Rational d = vf.den(x);
  if (sign(d) == 0) return std::nullopt;
  return Point{vf.nx(x) / d, vf.ny(x) / d};
}

SymbolicPlacement build_placement(const PlaneTriangulation& t, const POrder& po,
                                  const AreaAssignment& a) {
  if (po.n() != t.n) throw std::invalid_argument("build_placement: order does not match");
  SymbolicPlacement pl;
  pl.coords.assign(static_cast<std::size_t>(t.n), VertexFunctions{});

  const Polynomial one(Rational(1));
  const Polynomial zero;
  auto set = [&](int v, Polynomial nx, Polynomial ny, Polynomial den) {
    pl.coords[static_cast<std::size_t>(v)] = {std::move(nx), std::move(ny), std::move(den)};
  };

  // Base placement: the face on v1v2 opposite v4 pins the third coordinate,
  // the one containing v4 leaves its first coordinate free.
  Rational y3 = -a.signed_value(t, po.face0);
  Rational a4 = a.signed_value(t, po.face_base4);
  set(po.vertex_at(1), zero, zero, one);
  set(po.vertex_at(2), one, zero, one);
  set(po.vertex_at(3), one, Polynomial(y3), one);
  set(po.vertex_at(4), Polynomial::variable(), Polynomial(a4), one);

  for (const ConstructionStep& st : po.steps) {
    const VertexFunctions& F = pl.coords[static_cast<std::size_t>(st.pf)];
    const VertexFunctions& M = pl.coords[static_cast<std::size_t>(st.pm)];
    const VertexFunctions& L = pl.coords[static_cast<std::size_t>(st.pl)];
    Rational av = a.signed_value(t, st.face_a);
    Rational bv = a.signed_value(t, st.face_b);

    Polynomial dtilde = F.nx * (M.ny * L.den - L.ny * M.den) + M.nx * (L.ny * F.den - F.ny * L.den) +
                        L.nx * (F.ny * M.den - M.ny * F.den);
    if (dtilde.is_zero())
      throw ZeroDenominatorError("predecessors of vertex " + std::to_string(st.vertex) +
                                 " are collinear for every coordinate value");

    Polynomial g = poly_gcd(M.den, dtilde);
    Polynomial f_raw = poly_div_exact(M.den, g);
    Polynomial e_raw = poly_div_exact(dtilde, g);
    // Scale the coprime pair so that den = den_m * e comes out monic; the
    // coordinate functions pick up the same factor through e and f.
    Rational c = Rational(1) / e_raw.leading_coefficient();
    Polynomial e = c * e_raw;
    Polynomial f = c * f_raw;
    Polynomial den = M.den * e;
    if (!(den == (dtilde * f)))
      throw std::logic_error("denominator split identity violated");

    Polynomial common = e - ((av + bv) * (F.den * L.den * f));
    Polynomial nx = f * M.den * (av * (L.nx * F.den) + bv * (F.nx * L.den)) + M.nx * common;
    Polynomial ny = f * M.den * (av * (L.ny * F.den) + bv * (F.ny * L.den)) + M.ny * common;

    set(st.vertex, std::move(nx), std::move(ny), den);
    if (den.degree() >= 1) pl.excluded.push_back(den);
    pl.steps.push_back({st.vertex, std::move(dtilde), std::move(e), std::move(f)});
  }

  pl.last_face = face_determinant(t, pl.coords, po.face_a);
  return pl;
}

RationalFunction face_determinant(const PlaneTriangulation& t,
                                  const std::vector<VertexFunctions>& coords, int face_id) {
  const FaceTriple& fc = t.face(face_id);
  const VertexFunctions& P = coords[static_cast<std::size_t>(fc[0])];
  const VertexFunctions& Q = coords[static_cast<std::size_t>(fc[1])];
  const VertexFunctions& R = coords[static_cast<std::size_t>(fc[2])];

  Polynomial dpq = P.den * Q.den;
  Polynomial dqr = Q.den * R.den;
  Polynomial drp = R.den * P.den;
  Polynomial common = poly_lcm(poly_lcm(dpq, dqr), drp);

  Polynomial num = (P.nx * Q.ny - Q.nx * P.ny) * poly_div_exact(common, dpq) +
                   (Q.nx * R.ny - R.nx * Q.ny) * poly_div_exact(common, dqr) +
                   (R.nx * P.ny - P.nx * R.ny) * poly_div_exact(common, drp);
  return RationalFunction(num, common);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AreaUniversal:
      return "AreaUniversal";
    case Verdict::NotAreaUniversalEulerian:
      return "NotAreaUniversal_Eulerian";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::NoPOrder:
      return "NoPOrder";
  }
  return "?";
}

namespace {

struct SampleSummary {
  int num_degree = 0;
  int den_degree = 0;
  bool crr = false;
};

enum class AttemptStatus { Ok, BuildFailed, Unstable };

AttemptStatus attempt(const PlaneTriangulation& t, const POrder& po,
                      const std::vector<AreaAssignment>& batch, SampleSummary* out) {
  std::optional<SampleSummary> agreed;
  for (const AreaAssignment& a : batch) {
    SymbolicPlacement pl;
    try {
      pl = build_placement(t, po, a);
    } catch (const ZeroDenominatorError&) {
      return AttemptStatus::BuildFailed;
    }
    SampleSummary s;
    s.num_degree = pl.last_face.numerator_degree();
    s.den_degree = pl.last_face.denominator_degree();
    s.crr = !pl.last_face.numerator().is_zero() &&
            !has_common_real_root(pl.last_face.numerator(), pl.last_face.denominator());
    if (!agreed) {
      agreed = s;
    } else if (agreed->num_degree != s.num_degree || agreed->den_degree != s.den_degree) {
      return AttemptStatus::Unstable;
    } else {
      agreed->crr = agreed->crr && s.crr;
    }
  }
  *out = *agreed;
  return AttemptStatus::Ok;
}

}  // namespace

AnalysisReport analyze(const PlaneTriangulation& t, int samples, std::uint64_t seed) {
  require_valid(t);
  if (samples < 1) throw std::invalid_argument("analyze: needs at least one sample");

  AnalysisReport report;
  if (t.n == 3) {
    // A single inner face: any triangle of the prescribed area realizes it.
    report.verdict = Verdict::AreaUniversal;
    report.crr = true;
    report.odd_max_degree = true;
    report.detail = "trivial triangulation";
    return report;
  }
  if (is_eulerian(t)) {
    report.verdict = Verdict::NotAreaUniversalEulerian;
    report.detail = "every vertex degree is even";
    return report;
  }

  std::mt19937_64 rng(seed);
  std::vector<AreaAssignment> batch0;
  for (int k = 0; k < samples; ++k) batch0.push_back(sample_generic(t, rng));
  report.samples_used = samples;
  std::optional<std::vector<AreaAssignment>> batch1;  // drawn on first need
  auto resample = [&]() -> const std::vector<AreaAssignment>& {
    if (!batch1) {
      batch1.emplace();
      for (int k = 0; k < samples; ++k) batch1->push_back(sample_generic(t, rng));
      report.samples_used += samples;
    }
    return *batch1;
  };

  bool found_any = false;
  bool certified = false;
  for_each_porder(t, [&](POrder&& po) {
    report.candidates_tried++;
    SampleSummary s;
    AttemptStatus st = attempt(t, po, batch0, &s);
    if (st != AttemptStatus::Ok) {
      AttemptStatus st2 = attempt(t, po, resample(), &s);
      if (st2 == AttemptStatus::Unstable && st == AttemptStatus::Unstable)
        throw UnstableDegreesError("last-face degrees disagree across independent samples");
      if (st2 != AttemptStatus::Ok) return true;  // skip this candidate
    }
    int max_degree = std::max(s.num_degree, s.den_degree);
    bool odd = max_degree >= 1 && max_degree % 2 == 1;
    if (!found_any || (s.crr && odd)) {
      found_any = true;
      report.numerator_degree = s.num_degree;
      report.denominator_degree = s.den_degree;
      report.crr = s.crr;
      report.odd_max_degree = odd;
      report.porder = po;
    }
    if (s.crr && odd) {
      certified = true;
      return false;  // stop: this order certifies area-universality
    }
    return true;
  });

  if (report.candidates_tried == 0) {
    report.verdict = Verdict::NoPOrder;
    report.detail = "no predecessor order exists";
    return report;
  }
  if (certified) {
    report.verdict = Verdict::AreaUniversal;
    report.detail = "last-face function has odd max-degree and no common real root";
  } else {
    report.verdict = Verdict::Inconclusive;
    report.detail = found_any ? "no candidate order certifies the criterion"
                              : "no candidate order admits a stable placement";
  }
  return report;
}

}  // namespace areal
