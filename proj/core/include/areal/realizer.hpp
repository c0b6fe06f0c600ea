#pragma once

#include "areal/area_assignment.hpp"
#include "areal/geometry.hpp"
#include "areal/porder.hpp"
#include "areal/rational_function.hpp"
#include "areal/symbolic.hpp"
#include "areal/triangulation.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace areal {

struct Drawing {
  std::vector<Point> position;  // by vertex id
};

struct FaceCheck {
  int face = -1;
  Rational target;    // signed: inner value, or -total for the outer face
  Rational achieved;  // determinant of the stored vertex triple
  Rational residual;  // achieved - target
  bool orientation_ok = false;  // sign agrees with the face kind; zero allowed
  bool degenerate = false;      // achieved == 0
};

struct RealizationReport {
  std::vector<FaceCheck> faces;  // inner faces in order, then the outer face
  bool sum_identity_ok = false;  // sum of all stored-face determinants is exactly zero
  bool orientations_ok = false;
  bool any_degenerate = false;
  Rational max_rel_residual{0};
  std::vector<int> residual_faces;  // ids with nonzero residual
  std::optional<Rational> x4;       // single-piece realizations only
  int face_a = -1, face_b = -1;     // residual-carrying faces when known
  std::vector<std::string> notes;

  bool ok(const Rational& tol) const {
    return sum_identity_ok && orientations_ok && max_rel_residual <= tol;
  }
};

enum class RealizeStatus {
  Ok,
  NoPOrder,
  NoRealRoot,
  AllRootsForbidden,
  Degenerate,
  BadInput,
};

const char* realize_status_name(RealizeStatus s);

struct SolveResult {
  RealizeStatus status = RealizeStatus::BadInput;
  Rational root;
};

/// Finds a rational x with |f(x) - target| <= tol * |target| whose value
/// avoids every real root of the forbidden polynomials. Roots of
/// numerator - target * denominator are isolated, the forbidden ones are
/// discarded exactly, and the survivor with the smallest |midpoint| is
/// refined first. pre: target != 0.
SolveResult solve_x4(const RationalFunction& f, const Rational& target,
                     const std::vector<Polynomial>& forbidden, const Rational& tol);

struct DrawingAttempt {
  bool ok = false;
  std::string error;
  Drawing drawing;
};

/// Places v1..v4 from the base rule with the given free coordinate and every
/// later vertex by solving its two linear area equations exactly. Fails with
/// an error when some predecessor triple is collinear at x4.
DrawingAttempt build_drawing(const PlaneTriangulation& t, const POrder& po,
                             const AreaAssignment& a, const Rational& x4);

/// K4 with the outer triangle placed at `outer` (positions for the stored cw
/// outer triple, in order): the center vertex goes to the convex combination
/// of the outer vertices weighted by the areas of their opposite faces.
/// Throws if det3(outer) != -total.
Drawing realize_k4(const PlaneTriangulation& t, const AreaAssignment& a,
                   const std::array<Point, 3>& outer);

/// Recomputes every face determinant against its signed target; checks
/// orientations (inner >= 0, outer <= 0, zero flagged as degenerate) and the
/// exact sum identity over all faces.
RealizationReport verify(const PlaneTriangulation& t, const AreaAssignment& a, const Drawing& d,
                         const Rational& tol);

struct RealizeOutcome {
  RealizeStatus status = RealizeStatus::BadInput;
  std::string error;
  Drawing drawing;
  RealizationReport report;
};

/// Full pipeline: decompose, realize each leaf (K4/K3 exactly, 4-connected
/// pieces through the one-variable root solve), glue interior pieces onto
/// their separating triangles by exact affine maps, verify.
RealizeOutcome realize(const PlaneTriangulation& t, const AreaAssignment& a, const Rational& tol);

/// Same, over an existing decomposition.
RealizeOutcome realize_tree(const PlaneTriangulation& t, const DecompositionTree& tree,
                            const AreaAssignment& a, const Rational& tol);

}  // namespace areal
