#include "areal/realizer.hpp"

#include "areal/sturm.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace areal {

const char* realize_status_name(RealizeStatus s) {
  switch (s) {
    case RealizeStatus::Ok:
      return "ok";
    case RealizeStatus::NoPOrder:
      return "no predecessor order";
    case RealizeStatus::NoRealRoot:
      return "no real root";
    case RealizeStatus::AllRootsForbidden:
      return "all roots forbidden";
    case RealizeStatus::Degenerate:
      return "degenerate assignment";
    case RealizeStatus::BadInput:
      return "bad input";
  }
  return "?";
}

namespace {

bool value_allowed(const Rational& x, const RationalFunction& f,
                   const std::vector<Polynomial>& forbidden) {
  if (sign(f.denominator()(x)) == 0) return false;
  for (const Polynomial& p : forbidden)
    if (sign(p(x)) == 0) return false;
  return true;
}

}  // namespace

namespace {

// Absolute-tolerance core of solve_x4.
SolveResult solve_x4_to(const RationalFunction& f, const Rational& target,
                        const std::vector<Polynomial>& forbidden, const Rational& tol_abs) {
  Polynomial g = f.numerator() - (target * f.denominator());
  if (g.is_zero()) {
    // The face area does not depend on the free coordinate; any admissible
    // value works.
    for (long k = 0;; ++k) {
      for (long s : {k, -k}) {
        Rational x(s);
        if (value_allowed(x, f, forbidden)) return {RealizeStatus::Ok, x};
        if (k == 0) break;
      }
    }
  }
  if (g.degree() < 1) return {RealizeStatus::NoRealRoot, Rational(0)};
  if (g.degree() == 1) {
    // Rational root, exact.
    Rational root = -g.coefficient(0) / g.coefficient(1);
    if (value_allowed(root, f, forbidden)) return {RealizeStatus::Ok, root};
    return {RealizeStatus::AllRootsForbidden, Rational(0)};
  }

  std::vector<Interval> roots = isolate_real_roots(g);
  if (roots.empty()) return {RealizeStatus::NoRealRoot, Rational(0)};

  // A root interval is forbidden iff its (unique) root of g is also a root
  // of some excluded polynomial, which is exact via the gcd.
  std::vector<Interval> usable;
  for (const Interval& iv : roots) {
    bool bad = false;
    for (const Polynomial& p : forbidden) {
      Polynomial h = poly_gcd(g, p);
      if (h.degree() >= 1 && sturm_count(h, iv) > 0) {
        bad = true;
        break;
      }
    }
    if (!bad) usable.push_back(iv);
  }
  if (usable.empty()) return {RealizeStatus::AllRootsForbidden, Rational(0)};

  std::sort(usable.begin(), usable.end(), [](const Interval& a, const Interval& b) {
    Rational ma = abs(a.midpoint()), mb = abs(b.midpoint());
    if (ma != mb) return ma < mb;
    return a.lo < b.lo;
  });

  Polynomial sf = g;
  {
    Polynomial gg = poly_gcd(g, g.derivative());
    if (gg.degree() >= 1) sf = poly_div_exact(g, gg).monic();
  }
  SturmChain chain(sf);
  for (const Interval& start : usable) {
    Interval cur = start;
    if (sign(sf(cur.hi)) == 0) {
      // The isolated root is rational and sits at the right endpoint.
      if (value_allowed(cur.hi, f, forbidden)) return {RealizeStatus::Ok, cur.hi};
      continue;
    }
    bool give_up = false;
    for (int iter = 0; iter < 100000 && !give_up; ++iter) {
      Rational mid = cur.midpoint();
      if (sign(sf(mid)) == 0) {
        if (value_allowed(mid, f, forbidden)) return {RealizeStatus::Ok, mid};
        give_up = true;
        break;
      }
      if (value_allowed(mid, f, forbidden)) {
        std::optional<Rational> val = f(mid);
        if (val && abs(*val - target) <= tol_abs) return {RealizeStatus::Ok, mid};
      }
      Interval left(cur.lo, mid);
      cur = (chain.count(left) == 1) ? left : Interval(mid, cur.hi);
    }
  }
  return {RealizeStatus::AllRootsForbidden, Rational(0)};
}

}  // namespace

SolveResult solve_x4(const RationalFunction& f, const Rational& target,
                     const std::vector<Polynomial>& forbidden, const Rational& tol) {
  if (sign(target) == 0) throw std::invalid_argument("solve_x4: zero target");
  if (sign(tol) <= 0) throw std::invalid_argument("solve_x4: tol must be positive");
  return solve_x4_to(f, target, forbidden, abs(target) * tol);
}

DrawingAttempt build_drawing(const PlaneTriangulation& t, const POrder& po,
                             const AreaAssignment& a, const Rational& x4) {
  DrawingAttempt out;
  out.drawing.position.assign(static_cast<std::size_t>(t.n), Point{Rational(0), Rational(0)});
  std::vector<Point>& P = out.drawing.position;

  Rational y3 = -a.signed_value(t, po.face0);
  Rational a4 = a.signed_value(t, po.face_base4);
  P[static_cast<std::size_t>(po.vertex_at(1))] = {Rational(0), Rational(0)};
  P[static_cast<std::size_t>(po.vertex_at(2))] = {Rational(1), Rational(0)};
  P[static_cast<std::size_t>(po.vertex_at(3))] = {Rational(1), y3};
  P[static_cast<std::size_t>(po.vertex_at(4))] = {x4, a4};

  for (const ConstructionStep& st : po.steps) {
    const Point& F = P[static_cast<std::size_t>(st.pf)];
    const Point& M = P[static_cast<std::size_t>(st.pm)];
    const Point& L = P[static_cast<std::size_t>(st.pl)];
    Rational av = a.signed_value(t, st.face_a);
    Rational bv = a.signed_value(t, st.face_b);
    // det3(F, M, v) = av and det3(M, L, v) = bv, linear in v.
    Rational a11 = F.y - M.y, a12 = M.x - F.x;
    Rational a21 = M.y - L.y, a22 = L.x - M.x;
    Rational r1 = av - (F.x * M.y - M.x * F.y);
    Rational r2 = bv - (M.x * L.y - L.x * M.y);
    Rational det = a11 * a22 - a12 * a21;  // equals det3(F, M, L)
    if (sign(det) == 0) {
      out.error = "collinear predecessors at vertex " + std::to_string(st.vertex);
      return out;
    }
    P[static_cast<std::size_t>(st.vertex)] = {(r1 * a22 - r2 * a12) / det, (a11 * r2 - a21 * r1) / det};
  }
  out.ok = true;
  return out;
}

Drawing realize_k4(const PlaneTriangulation& t, const AreaAssignment& a,
                   const std::array<Point, 3>& outer) {
  require_valid(t);
  if (t.n != 4) throw std::invalid_argument("realize_k4: not a K4 piece");
  if (det3(outer[0], outer[1], outer[2]) != -a.total)
    throw std::invalid_argument("realize_k4: outer triangle area differs from the assignment total");

  Drawing d;
  d.position.assign(4, Point{Rational(0), Rational(0)});
  for (int k = 0; k < 3; ++k)
    d.position[static_cast<std::size_t>(t.outer_face[static_cast<std::size_t>(k)])] =
        outer[static_cast<std::size_t>(k)];

  int center = 0 + 1 + 2 + 3 - t.outer_face[0] - t.outer_face[1] - t.outer_face[2];
  // Barycentric: each inner face pulls the center toward its opposite outer
  // vertex with weight equal to its prescribed area.
  Rational cx(0), cy(0);
  for (std::size_t id = 0; id < t.inner_faces.size(); ++id) {
    const FaceTriple& fc = t.inner_faces[id];
    int opposite = -1;
    for (int v : t.outer_face)
      if (v != fc[0] && v != fc[1] && v != fc[2]) opposite = v;
    if (opposite < 0) throw std::invalid_argument("realize_k4: face without opposite outer vertex");
    cx += a.values[id] * d.position[static_cast<std::size_t>(opposite)].x;
    cy += a.values[id] * d.position[static_cast<std::size_t>(opposite)].y;
  }
  d.position[static_cast<std::size_t>(center)] = {cx / a.total, cy / a.total};
  return d;
}

RealizationReport verify(const PlaneTriangulation& t, const AreaAssignment& a, const Drawing& d,
                         const Rational& tol) {
  (void)tol;
  if (static_cast<int>(d.position.size()) != t.n)
    throw std::invalid_argument("verify: drawing size differs from vertex count");
  RealizationReport rep;
  Rational sum(0);
  bool orient_ok = true;
  for (int id = 0; id <= t.outer_id(); ++id) {
    const FaceTriple& fc = t.face(id);
    FaceCheck c;
    c.face = id;
    c.target = a.signed_value(t, id);
    c.achieved = det3(d.position[static_cast<std::size_t>(fc[0])],
                      d.position[static_cast<std::size_t>(fc[1])],
                      d.position[static_cast<std::size_t>(fc[2])]);
    c.residual = c.achieved - c.target;
    sum += c.achieved;
    c.degenerate = sign(c.achieved) == 0;
    c.orientation_ok = t.is_outer(id) ? sign(c.achieved) <= 0 : sign(c.achieved) >= 0;
    orient_ok = orient_ok && c.orientation_ok;
    rep.any_degenerate = rep.any_degenerate || c.degenerate;
    if (sign(c.residual) != 0) {
      rep.residual_faces.push_back(id);
      Rational denom = sign(c.target) != 0 ? abs(c.target) : a.total;
      Rational rel = abs(c.residual) / denom;
      if (rel > rep.max_rel_residual) rep.max_rel_residual = rel;
    }
    rep.faces.push_back(std::move(c));
  }
  rep.sum_identity_ok = sign(sum) == 0;
  rep.orientations_ok = orient_ok;
  return rep;
}

namespace {

struct PieceValues {
  std::vector<Rational> values;
  Rational total{0};
};

struct LeafInfo {
  std::vector<int> input_vertices;
  std::optional<Rational> x4;
  int face_a_input = -2, face_b_input = -2;
  bool perturbed = false;
};

struct NodeResult {
  RealizeStatus status = RealizeStatus::BadInput;
  std::string error;
  std::vector<Point> pos;  // per piece vertex
};

std::string vertex_list(const std::vector<int>& vmap) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < vmap.size(); ++k) os << (k ? "," : "") << vmap[k];
  os << "}";
  return os.str();
}

struct FourConnResult {
  RealizeStatus status = RealizeStatus::BadInput;
  std::string error;
  std::vector<Point> pos;
  Rational x4;
  int face_a = -1, face_b = -1;
  bool perturbed = false;
};

void promote(RealizeStatus& worst, RealizeStatus s) {
  auto rank = [](RealizeStatus x) {
    switch (x) {
      case RealizeStatus::NoRealRoot:
        return 3;
      case RealizeStatus::AllRootsForbidden:
        return 2;
      case RealizeStatus::Degenerate:
        return 1;
      default:
        return 0;
    }
  };
  if (rank(s) > rank(worst)) worst = s;
}

FourConnResult realize_four_connected(const PlaneTriangulation& piece, const PieceValues& vals,
                                      const Rational& tol, bool allow_perturb) {
  FourConnResult out;
  AreaAssignment aa = AreaAssignment::make(vals.values);
  RealizeStatus worst = RealizeStatus::NoPOrder;
  bool degenerate_seen = false;
  bool solved = false;

  for_each_porder(piece, [&](POrder&& po) {
    SymbolicPlacement pl;
    try {
      pl = build_placement(piece, po, aa);
    } catch (const ZeroDenominatorError&) {
      degenerate_seen = true;
      return true;
    }
    Rational target = aa.signed_value(piece, po.face_a);
    if (sign(target) == 0) {
      degenerate_seen = true;
      return true;
    }
    // The sum identity pushes the complement of the face_a residual onto
    // face_b, so the absolute budget is set by the smaller of the two.
    auto budget = [&](int face_id) {
      Rational t = aa.signed_value(piece, face_id);
      return sign(t) == 0 ? aa.total : abs(t);
    };
    Rational tol_abs = tol * std::min(budget(po.face_a), budget(po.face_b));
    SolveResult sr = solve_x4_to(pl.last_face, target, pl.excluded, tol_abs);
    if (sr.status != RealizeStatus::Ok) {
      promote(worst, sr.status);
      return true;
    }
    DrawingAttempt da = build_drawing(piece, po, aa, sr.root);
    if (!da.ok) {
      degenerate_seen = true;
      return true;
    }
    out.pos = std::move(da.drawing.position);
    out.x4 = sr.root;
    out.face_a = po.face_a;
    out.face_b = po.face_b;
    out.status = RealizeStatus::Ok;
    solved = true;
    return false;
  });
  if (solved) return out;

  if (degenerate_seen && allow_perturb) {
    // Non-generic values (zero faces, exact relations) can defeat the
    // symbolic route. Retry once on a slightly perturbed assignment; the
    // deviation stays below tol/2 relative so the final report still meets
    // the caller's tolerance.
    std::mt19937_64 rng(0xa5eaf00dULL);
    PieceValues nudged = vals;
    const std::size_t m = nudged.values.size();
    for (Rational& v : nudged.values) {
      Rational jitter = Rational(static_cast<long>(rng() % 1048576) + 1, 1048576);
      if (sign(v) == 0)
        v = vals.total * tol * jitter / Rational(8 * static_cast<long>(m));
      else
        v *= Rational(1) + tol * jitter / 2;
    }
    nudged.total = 0;
    for (const Rational& v : nudged.values) nudged.total += v;
    FourConnResult retry = realize_four_connected(piece, nudged, tol / 3, false);
    if (retry.status == RealizeStatus::Ok) {
      retry.perturbed = true;
      return retry;
    }
  }

  out.status = degenerate_seen && worst == RealizeStatus::NoPOrder ? RealizeStatus::Degenerate : worst;
  out.error = realize_status_name(out.status);
  return out;
}

NodeResult realize_node(const DecompositionNode* node, const PieceValues& vals,
                        const std::optional<std::array<Point, 3>>& outer_target, const Rational& tol,
                        std::vector<std::string>& notes, std::vector<LeafInfo>& leaf_infos) {
  const PlaneTriangulation& piece = node->piece;
  NodeResult res;

  if (node->leaf()) {
    // Fully degenerate sub-assignment: every face collapses onto the target
    // segment (the outer triangle itself has zero area then).
    if (sign(vals.total) == 0) {
      if (!outer_target) {
        res.error = "zero total area";
        return res;
      }
      res.pos.assign(static_cast<std::size_t>(piece.n), (*outer_target)[0]);
      for (int k = 0; k < 3; ++k)
        res.pos[static_cast<std::size_t>(piece.outer_face[static_cast<std::size_t>(k)])] =
            (*outer_target)[static_cast<std::size_t>(k)];
      res.status = RealizeStatus::Ok;
      return res;
    }

    std::array<Point, 3> outer_pts;
    if (outer_target) {
      outer_pts = *outer_target;
    } else {
      // Canonical frame: right triangle of the prescribed total area.
      outer_pts = {Point{Rational(0), Rational(0)}, Point{Rational(0), Rational(1)},
                   Point{vals.total, Rational(0)}};
    }

    if (piece.n == 3) {
      res.pos.assign(3, Point{});
      for (int k = 0; k < 3; ++k)
        res.pos[static_cast<std::size_t>(piece.outer_face[static_cast<std::size_t>(k)])] =
            outer_pts[static_cast<std::size_t>(k)];
      res.status = RealizeStatus::Ok;
      return res;
    }
    if (piece.n == 4) {
      Drawing d = realize_k4(piece, AreaAssignment::make(vals.values), outer_pts);
      res.pos = std::move(d.position);
      res.status = RealizeStatus::Ok;
      return res;
    }

    FourConnResult fc = realize_four_connected(piece, vals, tol, true);
    if (fc.status != RealizeStatus::Ok) {
      res.status = fc.status;
      res.error = "component on input vertices " + vertex_list(node->vmap) + ": " +
                  realize_status_name(fc.status);
      return res;
    }
    if (outer_target) {
      std::array<Point, 3> src;
      for (int k = 0; k < 3; ++k)
        src[static_cast<std::size_t>(k)] =
            fc.pos[static_cast<std::size_t>(piece.outer_face[static_cast<std::size_t>(k)])];
      if (sign(det3(src[0], src[1], src[2])) == 0 || sign(det3(outer_pts[0], outer_pts[1], outer_pts[2])) == 0) {
        res.status = RealizeStatus::Degenerate;
        res.error = "component on input vertices " + vertex_list(node->vmap) +
                    ": degenerate outer triangle";
        return res;
      }
      AffineMap m = AffineMap::from_triangles(src, outer_pts);
      for (Point& p : fc.pos) p = m(p);
    }
    LeafInfo info;
    info.input_vertices = node->vmap;
    info.x4 = fc.x4;
    info.face_a_input = node->fmap[static_cast<std::size_t>(fc.face_a)];
    info.face_b_input = piece.is_outer(fc.face_b)
                            ? -3
                            : node->fmap[static_cast<std::size_t>(fc.face_b)];
    info.perturbed = fc.perturbed;
    {
      std::ostringstream os;
      os << "component " << vertex_list(node->vmap) << ": x4 = " << to_string(fc.x4)
         << ", residual faces " << info.face_a_input << " and "
         << (info.face_b_input == -3 ? std::string("outer") : std::to_string(info.face_b_input));
      if (fc.perturbed) os << " (assignment perturbed within tolerance)";
      notes.push_back(os.str());
    }
    leaf_infos.push_back(std::move(info));
    res.pos = std::move(fc.pos);
    res.status = RealizeStatus::Ok;
    return res;
  }

  // Internal node: realize the exterior with the separating triangle given
  // the interior's total, then fit the interior into the drawn triangle.
  const DecompositionNode* in = node->interior.get();
  const DecompositionNode* ex = node->exterior.get();

  PieceValues vi;
  vi.values.reserve(in->fmap_parent.size());
  for (int f : in->fmap_parent) {
    if (f < 0) {
      res.error = "internal: interior piece with stand-in face";
      return res;
    }
    vi.values.push_back(vals.values[static_cast<std::size_t>(f)]);
    vi.total += vi.values.back();
  }

  PieceValues ve;
  ve.values.reserve(ex->fmap_parent.size());
  for (int f : ex->fmap_parent) {
    ve.values.push_back(f < 0 ? vi.total : vals.values[static_cast<std::size_t>(f)]);
    ve.total += ve.values.back();
  }

  NodeResult re = realize_node(ex, ve, outer_target, tol, notes, leaf_infos);
  if (re.status != RealizeStatus::Ok) return re;

  // Positions of the interior's outer triangle inside the exterior drawing.
  std::vector<int> ext_of_parent(static_cast<std::size_t>(piece.n), -1);
  for (std::size_t k = 0; k < ex->vmap_parent.size(); ++k)
    ext_of_parent[static_cast<std::size_t>(ex->vmap_parent[k])] = static_cast<int>(k);
  std::array<Point, 3> tri_target;
  for (int k = 0; k < 3; ++k) {
    int parent_id = in->vmap_parent[static_cast<std::size_t>(
        in->piece.outer_face[static_cast<std::size_t>(k)])];
    int ext_id = ext_of_parent[static_cast<std::size_t>(parent_id)];
    if (ext_id < 0) {
      res.error = "internal: separating triangle vertex missing from the exterior piece";
      return res;
    }
    tri_target[static_cast<std::size_t>(k)] = re.pos[static_cast<std::size_t>(ext_id)];
  }

  NodeResult ri = realize_node(in, vi, tri_target, tol, notes, leaf_infos);
  if (ri.status != RealizeStatus::Ok) return ri;

  res.pos.assign(static_cast<std::size_t>(piece.n), Point{});
  for (std::size_t k = 0; k < ex->vmap_parent.size(); ++k)
    res.pos[static_cast<std::size_t>(ex->vmap_parent[k])] = re.pos[k];
  for (std::size_t k = 0; k < in->vmap_parent.size(); ++k)
    res.pos[static_cast<std::size_t>(in->vmap_parent[k])] = ri.pos[k];
  res.status = RealizeStatus::Ok;
  return res;
}

}  // namespace

RealizeOutcome realize_tree(const PlaneTriangulation& t, const DecompositionTree& tree,
                            const AreaAssignment& a, const Rational& tol) {
  if (sign(tol) <= 0) throw std::invalid_argument("realize: tol must be positive");
  if (static_cast<int>(a.values.size()) != static_cast<int>(t.inner_faces.size()))
    throw std::invalid_argument("realize: area count differs from the inner face count");

  RealizeOutcome out;
  PieceValues top{a.values, a.total};
  std::vector<std::string> notes;
  std::vector<LeafInfo> infos;
  NodeResult nr = realize_node(tree.root.get(), top, std::nullopt, tol, notes, infos);
  if (nr.status != RealizeStatus::Ok) {
    out.status = nr.status;
    out.error = nr.error;
    return out;
  }
  out.drawing.position = std::move(nr.pos);
  out.report = verify(t, a, out.drawing, tol);
  out.report.notes = std::move(notes);
  if (infos.size() == 1 && tree.root->leaf()) {
    out.report.x4 = infos.front().x4;
    out.report.face_a = infos.front().face_a_input;
    out.report.face_b = infos.front().face_b_input == -3 ? t.outer_id() : infos.front().face_b_input;
  }
  out.status = RealizeStatus::Ok;
  return out;
}

RealizeOutcome realize(const PlaneTriangulation& t, const AreaAssignment& a, const Rational& tol) {
  require_valid(t);
  DecompositionTree tree = decompose(t);
  return realize_tree(t, tree, a, tol);
}

}  // namespace areal
