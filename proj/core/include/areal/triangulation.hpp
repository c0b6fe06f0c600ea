#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace areal {

using FaceTriple = std::array<int, 3>;

// Combinatorial plane triangulation: inner faces are stored as ccw vertex
// triples, the outer face as a cw triple, so every edge is traversed once in
// each direction across its two incident faces.
//
// Faces are addressed by index: 0..inner_faces.size()-1 are the inner faces
// in stored order, outer_id() is the outer face.
struct PlaneTriangulation {
  int n = 0;
  std::vector<FaceTriple> inner_faces;
  FaceTriple outer_face{{-1, -1, -1}};
  std::vector<std::string> labels;  // optional; empty or size n

  int outer_id() const { return static_cast<int>(inner_faces.size()); }
  int face_count() const { return static_cast<int>(inner_faces.size()) + 1; }
  bool is_outer(int face_id) const { return face_id == outer_id(); }
  const FaceTriple& face(int face_id) const {
    return is_outer(face_id) ? outer_face : inner_faces[static_cast<std::size_t>(face_id)];
  }
  std::string label(int v) const {
    if (v >= 0 && v < static_cast<int>(labels.size()) && !labels[static_cast<std::size_t>(v)].empty())
      return labels[static_cast<std::size_t>(v)];
    return std::to_string(v);
  }
};

/// Checks every structural invariant: vertex ids in range, n >= 3, face count
/// 2n-4, edge count 3n-6, every edge in exactly two faces traversed in
/// opposite directions, every vertex on some face. Returns one message per
/// violation; empty means valid.
std::vector<std::string> validate(const PlaneTriangulation& t);

/// Throws std::invalid_argument listing all violations.
void require_valid(const PlaneTriangulation& t);

// Cached adjacency and rotation data for a valid triangulation.
class Adjacency {
 public:
  explicit Adjacency(const PlaneTriangulation& t);

  int degree(int v) const { return static_cast<int>(neighbors_[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }  // sorted pairs, lex order

  /// Face id of the unique face traversing the directed edge u -> v; -1 if
  /// the directed edge does not occur.
  int face_with_directed_edge(int u, int v) const;
  /// The two faces incident to the undirected edge {u, v}.
  std::array<int, 2> faces_of_edge(int u, int v) const;
  /// Faces incident to vertex v.
  const std::vector<int>& faces_of_vertex(int v) const {
    return vertex_faces_[static_cast<std::size_t>(v)];
  }

 private:
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<std::array<int, 2>> edges_;
  std::map<std::pair<int, int>, int> directed_face_;
};

/// True iff every vertex degree is even. pre: valid t.
bool is_eulerian(const PlaneTriangulation& t);

/// All vertex triples that are mutually adjacent but bound no face, as
/// sorted triples in lexicographic order. Empty iff t is 4-connected
/// (for n > 4). pre: valid t.
std::vector<std::array<int, 3>> separating_triangles(const PlaneTriangulation& t);

bool is_four_connected(const PlaneTriangulation& t);  // n > 4 and no separating triangle

// Decomposition along separating triangles. Piece vertices are re-indexed
// densely; vmap/fmap translate back to the *input* triangulation, while
// vmap_parent/fmap_parent address the parent piece (identity at the root).
// A face standing in for a separating triangle maps to -1 (it is not a face
// of the triangulation it was cut from); only the exterior child of a split
// gains such a face relative to its parent.
struct DecompositionNode {
  PlaneTriangulation piece;
  std::vector<int> vmap;         // piece vertex -> input vertex
  std::vector<int> fmap;         // piece inner face -> input inner face, or -1
  std::vector<int> vmap_parent;  // piece vertex -> parent piece vertex
  std::vector<int> fmap_parent;  // piece inner face -> parent piece inner face, or -1
  std::array<int, 3> split{{-1, -1, -1}};        // separating triangle, input ids, sorted
  std::array<int, 3> split_local{{-1, -1, -1}};  // same triangle in this piece's ids, sorted
  std::unique_ptr<DecompositionNode> interior, exterior;
  bool leaf() const { return interior == nullptr; }
};

struct DecompositionTree {
  std::unique_ptr<DecompositionNode> root;
  // The returned pointers live inside this tree; calling on a temporary is
  // rejected.
  std::vector<const DecompositionNode*> leaves() const&;
  std::vector<const DecompositionNode*> leaves() const&& = delete;
};

/// Recursively splits along the lexicographically first separating triangle
/// until no piece has one. pre: valid t.
DecompositionTree decompose(const PlaneTriangulation& t);

}  // namespace areal
