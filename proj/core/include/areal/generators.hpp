#pragma once

#include "areal/triangulation.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace areal {

struct FamilySpec {
  enum class Kind { Octahedron, K4, Accordion, DoubleStacking, Stacked };
  Kind kind = Kind::Octahedron;
  int l = 0;          // accordion order / double-stacking first parameter
  int k = 0;          // double-stacking second parameter
  int n = 0;          // stacked: vertex count
  std::uint64_t seed = 0;
};

PlaneTriangulation generate(const FamilySpec& spec);

/// The plane octahedron: outer triangle A,B,C (ids 0,1,2), central triangle
/// u,v,w (ids 3,4,5); all degrees 4.
PlaneTriangulation octahedron();

/// K4: outer triangle 0,1,2 with center vertex 3.
PlaneTriangulation k4();

/// Subdivides the inner edge e with k new vertices, each joined to the two
/// apexes of e's incident faces. New vertices get ids n..n+k-1 along the
/// path from e[0] to e[1]. k = 0 returns t unchanged. Throws if e is not an
/// inner edge.
PlaneTriangulation diamondize(const PlaneTriangulation& t, std::array<int, 2> e, int k);

/// Stacks a new vertex (id n) into the given inner face.
PlaneTriangulation stack(const PlaneTriangulation& t, int inner_face_id);

/// Accordion A_l: octahedron with l extra degree-4 vertices subdividing one
/// central edge; l + 6 vertices. Vertex ids are chosen so the canonical
/// construction order below is discovered by the plain search.
PlaneTriangulation accordion(int l);

/// Double stacking DS(l,k), l,k >= 1: octahedron with one spoke edge
/// subdivided l-1 times and the opposite central edge k-1 times; l + k + 4
/// vertices. DS(1,1) is the octahedron.
PlaneTriangulation double_stacking(int l, int k);

/// Random stacked 3-tree on n >= 4 vertices, reproducible by seed.
PlaneTriangulation stacked_3tree(int n, std::uint64_t seed);

/// Construction order (v1..vn) behind the accordion analysis, together with
/// its unoriented edge. Feed through porder_from_order.
std::vector<int> accordion_order(int l);
std::array<int, 2> accordion_unoriented_edge(int l);

/// Same for double stackings.
std::vector<int> double_stacking_order(int l, int k);
std::array<int, 2> double_stacking_unoriented_edge(int l, int k);

}  // namespace areal
