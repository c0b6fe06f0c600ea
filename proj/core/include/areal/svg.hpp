#pragma once

#include "areal/area_assignment.hpp"
#include "areal/realizer.hpp"
#include "areal/triangulation.hpp"

#include <string>

namespace areal {

/// Renders the drawing as SVG: faces shaded by residual (green exact, amber
/// within tol, red beyond), labeled with target/achieved geometric areas
/// (half the determinant values). The viewport is the drawing's bounding box
/// with a 5% margin. `areas` may be null for an unlabeled rendering.
std::string render_svg(const PlaneTriangulation& t, const Drawing& d, const AreaAssignment* areas,
                       const Rational& tol);

void save_svg(const PlaneTriangulation& t, const Drawing& d, const AreaAssignment* areas,
              const Rational& tol, const std::string& path);

}  // namespace areal
