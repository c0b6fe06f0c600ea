#include "areal/area_assignment.hpp"

#include <stdexcept>

namespace areal {

AreaAssignment AreaAssignment::make(std::vector<Rational> values) {
  AreaAssignment a;
  a.total = 0;
  for (const Rational& v : values) {
    if (sign(v) < 0) throw std::invalid_argument("area assignment: negative value");
    a.total += v;
  }
  if (sign(a.total) <= 0) throw std::invalid_argument("area assignment: total must be positive");
  a.values = std::move(values);
  return a;
}

Rational AreaAssignment::signed_value(const PlaneTriangulation& t, int face_id) const {
  if (static_cast<int>(values.size()) != static_cast<int>(t.inner_faces.size()))
    throw std::invalid_argument("area assignment: size differs from the inner face count");
  if (t.is_outer(face_id)) return -total;
  return values[static_cast<std::size_t>(face_id)];
}

namespace {

// Uniform on [1, 2^32]; 2^64 is an exact multiple of 2^32, so taking the low
// bits introduces no bias.
Integer draw_u32(std::mt19937_64& rng) {
  return Integer(static_cast<unsigned long>((rng() & 0xffffffffULL) + 1));
}

}  // namespace

AreaAssignment sample_generic(const PlaneTriangulation& t, std::mt19937_64& rng) {
  std::vector<Rational> vals;
  vals.reserve(t.inner_faces.size());
  for (std::size_t k = 0; k < t.inner_faces.size(); ++k)
    vals.push_back(make_rational(draw_u32(rng), draw_u32(rng)));
  return AreaAssignment::make(std::move(vals));
}

AreaAssignment sample_unit(const PlaneTriangulation& t, std::mt19937_64& rng) {
  std::vector<Rational> vals;
  vals.reserve(t.inner_faces.size());
  Rational total(0);
  for (std::size_t k = 0; k < t.inner_faces.size(); ++k) {
    Integer den = draw_u32(rng);
    Integer num = Integer(1) + Integer(static_cast<unsigned long>(rng() % mpz_get_ui(den.get_mpz_t())));
    Rational v = make_rational(num, den);
    total += v;
    vals.push_back(v);
  }
  for (Rational& v : vals) v /= total;
  return AreaAssignment::make(std::move(vals));
}

}  // namespace areal
