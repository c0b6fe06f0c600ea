#include "areal/graph_io.hpp"

#include "areal/generators.hpp"
#include "areal/realizer.hpp"

#include <doctest.h>

using namespace areal;

TEST_CASE("graph files round-trip exactly") {
  for (const PlaneTriangulation& t : {octahedron(), accordion(2), k4(), stacked_3tree(8, 5)}) {
    std::string text = write_graph(t);
    PlaneTriangulation back = parse_graph(text);
    CHECK(back.n == t.n);
    CHECK(back.inner_faces == t.inner_faces);
    CHECK(back.outer_face == t.outer_face);
    CHECK(back.labels == t.labels);
    CHECK(write_graph(back) == text);
  }
  // Comments and blank lines are ignored.
  PlaneTriangulation t = parse_graph("# a triangle\n\ntriangulation 3\ninner 0 1 2\nouter 0 2 1\n");
  CHECK(t.n == 3);
  CHECK(validate(t).empty());
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("inner 0 1 2\n"), doctest::Contains("line 1"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse_graph("triangulation 4\ninner 0 1\nouter 0 2 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_graph("triangulation 4\n"), std::runtime_error);  // no outer face
  CHECK_THROWS_AS(parse_graph("triangulation 4\nbogus 1 2 3\nouter 0 2 1\n"), std::runtime_error);
}

TEST_CASE("area files round-trip and reject malformed input") {
  AreaAssignment a = AreaAssignment::make({make_rational(1, 3), Rational(2), make_rational(7, 5)});
  std::string text = write_areas(a);
  AreaAssignment back = parse_areas(text);
  CHECK(back.values == a.values);
  CHECK(back.total == a.total);
  CHECK(write_areas(back) == text);

  CHECK_THROWS_AS(parse_areas("areas 2\n0 1/3\n"), std::runtime_error);          // missing entry
  CHECK_THROWS_AS(parse_areas("areas 2\n0 1\n0 2\n"), std::runtime_error);       // duplicate
  CHECK_THROWS_AS(parse_areas("areas 2\n0 1\n5 2\n"), std::runtime_error);       // out of range
  CHECK_THROWS_AS(parse_areas("areas 2\n0 -1\n1 2\n"), std::runtime_error);      // negative
  CHECK_THROWS_AS(parse_areas("areas 2\n0 1.5x\n1 2\n"), std::runtime_error);    // not a rational
  CHECK_THROWS_AS(parse_areas("areas 1\n0 0\n"), std::invalid_argument);         // zero total
}

TEST_CASE("drawing files round-trip with their report summary") {
  PlaneTriangulation t = accordion(1);
  std::mt19937_64 rng(2);
  AreaAssignment a = sample_unit(t, rng);
  RealizeOutcome out = realize(t, a, make_rational(1, 1000000000));
  REQUIRE(out.status == RealizeStatus::Ok);

  DrawingFile f = make_drawing_file(out.drawing, out.report);
  std::string text = write_drawing(f);
  DrawingFile back = parse_drawing(text);
  CHECK(back.drawing.position == f.drawing.position);
  CHECK(back.x4 == f.x4);
  CHECK(back.face_summaries == f.face_summaries);
  CHECK(back.sum_identity_ok == f.sum_identity_ok);
  CHECK(write_drawing(back) == text);

  CHECK_THROWS_AS(parse_drawing("drawing 2\nvertex 0 0 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_drawing("drawing 1\nvertex 0 0 0\nvertex 0 1 1\n"), std::runtime_error);
}
