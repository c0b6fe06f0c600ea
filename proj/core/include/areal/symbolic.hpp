#pragma once

#include "areal/area_assignment.hpp"
#include "areal/geometry.hpp"
#include "areal/polynomial.hpp"
#include "areal/porder.hpp"
#include "areal/rational_function.hpp"
#include "areal/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace areal {

// The predecessors of some vertex are collinear for every value of the free
// coordinate; only possible for non-generic area assignments.
struct ZeroDenominatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sampled area assignments keep disagreeing on the degrees of the last-face
// function; with the generic sampler this is practically impossible.
struct UnstableDegreesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinates of one placed vertex: (nx/den, ny/den), polynomials in the
// free coordinate of the fourth vertex.
struct VertexFunctions {
  Polynomial nx, ny, den;
};

// Denominator bookkeeping of one insertion: den = den_middle * e = dtilde * f
// with e, f coprime and den monic.
struct StepFunctions {
  int vertex = -1;
  Polynomial dtilde, e, f;
};

struct SymbolicPlacement {
  std::vector<VertexFunctions> coords;  // by vertex id
  std::vector<StepFunctions> steps;     // parallel to the order's steps
  std::vector<Polynomial> excluded;     // nonconstant denominators; their real
                                        // roots are the forbidden coordinates
  RationalFunction last_face;           // area of face_a as a function of x4

  /// Exact coordinates at a concrete value; nullopt if a denominator
  /// vanishes there.
  std::optional<Point> evaluate(int vertex, const Rational& x) const;
};

/// Runs the coordinate recurrence along the order: v1 = (0,0), v2 = (1,0),
/// v3 = (1, -target(face0)), v4 = (x, target(face v1v2v4)), then each later
/// vertex from its two face equations. Throws ZeroDenominatorError if some
/// step denominator is identically zero.
SymbolicPlacement build_placement(const PlaneTriangulation& t, const POrder& po,
                                  const AreaAssignment& a);

/// Determinant of the stored face triple over the rational-function
/// coordinates, brought onto a single monic denominator (no cancellation).
RationalFunction face_determinant(const PlaneTriangulation& t,
                                  const std::vector<VertexFunctions>& coords, int face_id);

enum class Verdict {
  AreaUniversal,
  NotAreaUniversalEulerian,
  Inconclusive,
  NoPOrder,
};

const char* verdict_name(Verdict v);

struct AnalysisReport {
  Verdict verdict = Verdict::Inconclusive;
  int numerator_degree = -1;    // of the last-face function
  int denominator_degree = -1;
  bool crr = false;             // numerator and denominator share no real root
  bool odd_max_degree = false;
  int samples_used = 0;
  int candidates_tried = 0;
  std::optional<POrder> porder;  // the order behind the reported degrees
  std::string detail;
};

/// Decision pipeline for a 4-connected triangulation (or K4): Eulerian check,
/// then over every candidate predecessor order, `samples` generic area
/// assignments; a certificate requires agreeing degrees, no common real root
/// and odd max-degree. Callers decompose non-4-connected input first.
AnalysisReport analyze(const PlaneTriangulation& t, int samples = 3, std::uint64_t seed = 1);

}  // namespace areal
