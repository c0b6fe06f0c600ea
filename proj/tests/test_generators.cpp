#include "areal/generators.hpp"
#include "areal/triangulation.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace areal;

namespace {

std::multiset<int> degree_multiset(const PlaneTriangulation& t) {
  Adjacency adj(t);
  std::multiset<int> out;
  for (int v = 0; v < t.n; ++v) out.insert(adj.degree(v));
  return out;
}

}  // namespace

TEST_CASE("every generated family member validates") {
  std::vector<PlaneTriangulation> all;
  all.push_back(octahedron());
  all.push_back(k4());
  for (int l = 0; l <= 6; ++l) all.push_back(accordion(l));
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k) all.push_back(double_stacking(l, k));
  for (int n = 4; n <= 12; ++n) all.push_back(stacked_3tree(n, 42 + static_cast<unsigned>(n)));
  for (const PlaneTriangulation& t : all) CHECK(validate(t).empty());
}

TEST_CASE("octahedron: counts, degrees, no separating triangles") {
  PlaneTriangulation oct = octahedron();
  CHECK(oct.n == 6);
  CHECK(oct.face_count() == 8);
  CHECK(is_eulerian(oct));
  CHECK(separating_triangles(oct).empty());
  Adjacency adj(oct);
  for (int v = 0; v < 6; ++v) CHECK(adj.degree(v) == 4);
}

TEST_CASE("diamondize: identity at order zero, degree bookkeeping, outer edge rejected") {
  PlaneTriangulation oct = octahedron();
  CHECK(diamondize(oct, {3, 4}, 0).inner_faces == oct.inner_faces);

  // Subdividing the central edge uv with k vertices: the two apexes gain k,
  // everything else keeps its degree, new vertices have degree 4.
  for (int k = 1; k <= 3; ++k) {
    PlaneTriangulation d = diamondize(oct, {3, 4}, k);
    CHECK(validate(d).empty());
    CHECK(d.n == 6 + k);
    Adjacency before(oct), after(d);
    int raised = 0;
    for (int v = 0; v < 6; ++v) {
      if (after.degree(v) != before.degree(v)) {
        raised++;
        CHECK(after.degree(v) == before.degree(v) + k);
      }
    }
    CHECK(raised == 2);
    for (int v = 6; v < d.n; ++v) CHECK(after.degree(v) == 4);
    // Outer face untouched.
    CHECK(d.outer_face == oct.outer_face);
  }

  CHECK_THROWS_AS(diamondize(oct, {0, 1}, 1), std::invalid_argument);  // outer edge
}

TEST_CASE("diamondize of a central octahedron edge is the 7-vertex accordion") {
  // The unique 4-connected plane triangulation on seven vertices: checking
  // vertex count and 4-connectedness pins the graph down.
  PlaneTriangulation d = diamondize(octahedron(), {3, 4}, 1);
  CHECK(d.n == 7);
  CHECK(validate(d).empty());
  CHECK(is_four_connected(d));
  PlaneTriangulation a1 = accordion(1);
  CHECK(is_four_connected(a1));
  CHECK(degree_multiset(d) == degree_multiset(a1));
}

TEST_CASE("accordion family") {
  CHECK(accordion(0).n == 6);
  CHECK(is_eulerian(accordion(0)));
  CHECK(separating_triangles(accordion(0)).empty());  // it is the octahedron
  CHECK(accordion(3).n == 9);
  for (int l = 0; l <= 6; ++l) {
    PlaneTriangulation a = accordion(l);
    CHECK(a.n == l + 6);
    CHECK(is_eulerian(a) == (l % 2 == 0));
    CHECK(separating_triangles(a).empty());
  }
}

TEST_CASE("double stacking family") {
  CHECK(double_stacking(1, 1).n == 6);
  CHECK(separating_triangles(double_stacking(1, 1)).empty());
  CHECK(degree_multiset(double_stacking(1, 1)) == degree_multiset(octahedron()));
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k) {
      PlaneTriangulation d = double_stacking(l, k);
      CHECK(d.n == l + k + 4);
      CHECK(is_eulerian(d) == (l % 2 == 1 && k % 2 == 1));
      CHECK(separating_triangles(d).empty());
    }
  // DS(l, 1) is isomorphic to the accordion of order l-1.
  for (int l = 2; l <= 5; ++l) {
    PlaneTriangulation d = double_stacking(l, 1);
    PlaneTriangulation a = accordion(l - 1);
    CHECK(d.n == a.n);
    CHECK(degree_multiset(d) == degree_multiset(a));
  }
}

TEST_CASE("stacked 3-trees") {
  CHECK(stacked_3tree(4, 9).inner_faces == k4().inner_faces);
  CHECK(separating_triangles(stacked_3tree(5, 9)).size() == 1);
  for (int n = 5; n <= 11; ++n) {
    PlaneTriangulation t = stacked_3tree(n, 1234 + static_cast<unsigned>(n));
    CHECK(validate(t).empty());
    DecompositionTree tree = decompose(t);
    auto leaves = tree.leaves();
    CHECK(static_cast<int>(leaves.size()) == n - 3);
    for (auto* leaf : leaves) CHECK(leaf->piece.n == 4);
  }
  // Reproducible by seed.
  CHECK(stacked_3tree(9, 77).inner_faces == stacked_3tree(9, 77).inner_faces);
}
