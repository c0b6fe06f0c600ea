#pragma once

#include "areal/rational.hpp"
#include "areal/triangulation.hpp"

#include <random>
#include <vector>

namespace areal {

// Nonnegative exact rational per inner face with positive total. The outer
// face carries the signed value -total, matching the orientation convention
// (inner faces ccw, outer face cw).
struct AreaAssignment {
  std::vector<Rational> values;
  Rational total;

  static AreaAssignment make(std::vector<Rational> values);  // validates, caches the total

  /// Signed target for any face id: values[f] for inner faces, -total for
  /// the outer face.
  Rational signed_value(const PlaneTriangulation& t, int face_id) const;
};

/// One value per inner face, each a reduced fraction with numerator and
/// denominator drawn uniformly from [1, 2^32]. Coefficient relations among
/// such draws that would collapse polynomial degrees require exact
/// cancellations and are vanishingly unlikely.
AreaAssignment sample_generic(const PlaneTriangulation& t, std::mt19937_64& rng);

/// One value per inner face, uniform in (0, 1], rescaled to total 1.
AreaAssignment sample_unit(const PlaneTriangulation& t, std::mt19937_64& rng);

}  // namespace areal
