#include "areal/triangulation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace areal {

namespace {

std::string face_str(const FaceTriple& f) {
  std::ostringstream os;
  os << "(" << f[0] << "," << f[1] << "," << f[2] << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> validate(const PlaneTriangulation& t) {
  std::vector<std::string> bad;
  if (t.n < 3) {
    bad.push_back("vertex count must be at least 3");
    return bad;
  }
  if (!t.labels.empty() && static_cast<int>(t.labels.size()) != t.n)
    bad.push_back("label list length differs from vertex count");

  auto check_face = [&](const FaceTriple& f, const char* kind) {
    for (int v : f)
      if (v < 0 || v >= t.n) {
        bad.push_back(std::string(kind) + " face " + face_str(f) + ": vertex out of range");
        return false;
      }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      bad.push_back(std::string(kind) + " face " + face_str(f) + ": repeated vertex");
      return false;
    }
    return true;
  };

  bool faces_ok = check_face(t.outer_face, "outer");
  for (const FaceTriple& f : t.inner_faces)
    faces_ok = check_face(f, "inner") && faces_ok;
  if (!faces_ok) return bad;

  if (t.face_count() != 2 * t.n - 4)
    bad.push_back("face count " + std::to_string(t.face_count()) + " differs from 2n-4 = " +
                  std::to_string(2 * t.n - 4));

  // Rotation-system check: each directed edge must occur exactly once, and
  // both directions of every undirected edge must be present.
  std::map<std::pair<int, int>, int> directed;  // directed edge -> occurrences
  auto add_face = [&](const FaceTriple& f) {
    for (int k = 0; k < 3; ++k) directed[{f[k], f[(k + 1) % 3]}]++;
  };
  add_face(t.outer_face);
  for (const FaceTriple& f : t.inner_faces) add_face(f);

  std::set<std::pair<int, int>> undirected;
  std::set<std::pair<int, int>> reported;
  for (const auto& [e, cnt] : directed) {
    auto key = std::minmax(e.first, e.second);
    undirected.insert(key);
    int both = cnt + (directed.count({e.second, e.first}) ? directed.at({e.second, e.first}) : 0);
    if (both > 2) {
      if (reported.insert(key).second)
        bad.push_back("edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                      ") lies in more than two faces");
    } else if (cnt == 2) {
      if (reported.insert(key).second)
        bad.push_back("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                      ") traversed twice in the same direction: inconsistent face orientation");
    }
  }
  for (const auto& [u, v] : undirected) {
    if (reported.count({u, v})) continue;
    if (!directed.count({u, v}) || !directed.count({v, u}))
      bad.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") lies in only one face");
  }

  if (static_cast<int>(undirected.size()) != 3 * t.n - 6)
    bad.push_back("edge count " + std::to_string(undirected.size()) + " differs from 3n-6 = " +
                  std::to_string(3 * t.n - 6));

  std::vector<bool> used(static_cast<std::size_t>(t.n), false);
  for (const auto& [u, v] : undirected) {
    used[static_cast<std::size_t>(u)] = true;
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < t.n; ++v)
    if (!used[static_cast<std::size_t>(v)]) bad.push_back("vertex " + std::to_string(v) + " lies on no face");

  return bad;
}

void require_valid(const PlaneTriangulation& t) {
  std::vector<std::string> bad = validate(t);
  if (bad.empty()) return;
  std::ostringstream os;
  os << "invalid triangulation:";
  for (const std::string& m : bad) os << "\n  - " << m;
  throw std::invalid_argument(os.str());
}

Adjacency::Adjacency(const PlaneTriangulation& t) {
  neighbors_.resize(static_cast<std::size_t>(t.n));
  vertex_faces_.resize(static_cast<std::size_t>(t.n));
  for (int id = 0; id < t.face_count(); ++id) {
    const FaceTriple& f = t.face(id);
    for (int k = 0; k < 3; ++k) {
      directed_face_[{f[k], f[(k + 1) % 3]}] = id;
      vertex_faces_[static_cast<std::size_t>(f[k])].push_back(id);
    }
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [e, id] : directed_face_) {
    (void)id;
    auto [u, v] = std::minmax(e.first, e.second);
    if (seen.insert({u, v}).second) {
      edges_.push_back({u, v});
      neighbors_[static_cast<std::size_t>(u)].push_back(v);
      neighbors_[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nbrs : neighbors_) std::sort(nbrs.begin(), nbrs.end());
}

bool Adjacency::adjacent(int u, int v) const {
  const std::vector<int>& nbrs = neighbors_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Adjacency::face_with_directed_edge(int u, int v) const {
  auto it = directed_face_.find({u, v});
  return it == directed_face_.end() ? -1 : it->second;
}

std::array<int, 2> Adjacency::faces_of_edge(int u, int v) const {
  int a = face_with_directed_edge(u, v);
  int b = face_with_directed_edge(v, u);
  if (a < 0 || b < 0) throw std::invalid_argument("faces_of_edge: not an edge");
  return {a, b};
}

bool is_eulerian(const PlaneTriangulation& t) {
  Adjacency adj(t);
  for (int v = 0; v < t.n; ++v)
    if (adj.degree(v) % 2 != 0) return false;
  return true;
}

std::vector<std::array<int, 3>> separating_triangles(const PlaneTriangulation& t) {
  Adjacency adj(t);
  std::set<std::array<int, 3>> faces;
  for (int id = 0; id < t.face_count(); ++id) {
    FaceTriple f = t.face(id);
    std::sort(f.begin(), f.end());
    faces.insert(f);
  }
  std::vector<std::array<int, 3>> out;
  for (const auto& [u, v] : adj.edges()) {
    const std::vector<int>& nu = adj.neighbors(u);
    const std::vector<int>& nv = adj.neighbors(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    for (int w : common) {
      if (w <= v) continue;  // u < v < w: each triangle found once
      std::array<int, 3> tri{u, v, w};
      if (!faces.count(tri)) out.push_back(tri);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_four_connected(const PlaneTriangulation& t) {
  return t.n > 4 && separating_triangles(t).empty();
}

namespace {

// Splits the faces of t into the two sides of triangle tri. Returns the set
// of face ids on the same side as the outer face (the exterior side).
std::vector<bool> exterior_side(const PlaneTriangulation& t, const Adjacency& adj,
                                const std::array<int, 3>& tri) {
  std::set<std::pair<int, int>> wall;
  for (int k = 0; k < 3; ++k) {
    auto [a, b] = std::minmax(tri[k], tri[(k + 1) % 3]);
    wall.insert({a, b});
  }
  std::vector<bool> ext(static_cast<std::size_t>(t.face_count()), false);
  std::queue<int> bfs;
  bfs.push(t.outer_id());
  ext[static_cast<std::size_t>(t.outer_id())] = true;
  while (!bfs.empty()) {
    int id = bfs.front();
    bfs.pop();
    const FaceTriple& f = t.face(id);
    for (int k = 0; k < 3; ++k) {
      int u = f[k], v = f[(k + 1) % 3];
      auto key = std::minmax(u, v);
      if (wall.count({key.first, key.second})) continue;
      int other = adj.face_with_directed_edge(v, u);
      if (other >= 0 && !ext[static_cast<std::size_t>(other)]) {
        ext[static_cast<std::size_t>(other)] = true;
        bfs.push(other);
      }
    }
  }
  return ext;
}

struct PieceBuild {
  PlaneTriangulation piece;
  std::vector<int> vmap;  // piece -> parent
  std::vector<int> fmap;  // piece inner face -> parent inner face, or -1
};

// Builds a piece from the selected parent faces plus the triangle tri as one
// extra face. `tri_as_outer` selects whether tri becomes the piece's outer
// face (interior piece) or an inner face (exterior piece).
PieceBuild build_piece(const PlaneTriangulation& t, const Adjacency& adj,
                       const std::vector<bool>& take, const std::array<int, 3>& tri,
                       bool tri_as_outer) {
  PieceBuild out;
  std::set<int> verts(tri.begin(), tri.end());
  for (int id = 0; id < t.face_count(); ++id) {
    if (!take[static_cast<std::size_t>(id)]) continue;
    for (int v : t.face(id)) verts.insert(v);
  }
  std::vector<int> old_of(verts.begin(), verts.end());
  std::vector<int> new_of(static_cast<std::size_t>(t.n), -1);
  for (std::size_t k = 0; k < old_of.size(); ++k) new_of[static_cast<std::size_t>(old_of[k])] = static_cast<int>(k);

  out.vmap = old_of;
  out.piece.n = static_cast<int>(old_of.size());
  if (!t.labels.empty()) {
    out.piece.labels.resize(old_of.size());
    for (std::size_t k = 0; k < old_of.size(); ++k)
      out.piece.labels[k] = t.labels[static_cast<std::size_t>(old_of[k])];
  }

  auto renumber = [&](const FaceTriple& f) {
    return FaceTriple{new_of[static_cast<std::size_t>(f[0])], new_of[static_cast<std::size_t>(f[1])],
                      new_of[static_cast<std::size_t>(f[2])]};
  };

  // Orient the stand-in face for tri so that it runs opposite to the taken
  // face at one of tri's edges; consistency along the other two edges is
  // checked by the validation pass the caller runs.
  int a = tri[0], b = tri[1], c = tri[2];
  int fa = adj.face_with_directed_edge(a, b);
  bool ab_taken = take[static_cast<std::size_t>(fa)];
  // If the taken side traverses a->b, the stand-in traverses b->a.
  FaceTriple stand_in = ab_taken ? FaceTriple{b, a, c} : FaceTriple{a, b, c};

  bool outer_taken = take[static_cast<std::size_t>(t.outer_id())];
  if (outer_taken)
    out.piece.outer_face = renumber(t.outer_face);
  for (int id = 0; id < static_cast<int>(t.inner_faces.size()); ++id) {
    if (!take[static_cast<std::size_t>(id)]) continue;
    out.piece.inner_faces.push_back(renumber(t.inner_faces[static_cast<std::size_t>(id)]));
    out.fmap.push_back(id);
  }
  if (tri_as_outer) {
    out.piece.outer_face = renumber(stand_in);
  } else {
    out.piece.inner_faces.push_back(renumber(stand_in));
    out.fmap.push_back(-1);
  }
  return out;
}

std::unique_ptr<DecompositionNode> decompose_rec(PlaneTriangulation piece, std::vector<int> vmap,
                                                 std::vector<int> fmap, std::vector<int> vmap_parent,
                                                 std::vector<int> fmap_parent) {
  auto node = std::make_unique<DecompositionNode>();
  node->piece = std::move(piece);
  node->vmap = std::move(vmap);
  node->fmap = std::move(fmap);
  node->vmap_parent = std::move(vmap_parent);
  node->fmap_parent = std::move(fmap_parent);

  std::vector<std::array<int, 3>> seps = separating_triangles(node->piece);
  if (seps.empty()) return node;

  const std::array<int, 3>& tri = seps.front();
  Adjacency adj(node->piece);
  std::vector<bool> ext = exterior_side(node->piece, adj, tri);
  std::vector<bool> interior(ext.size());
  for (std::size_t k = 0; k < ext.size(); ++k) interior[k] = !ext[k];

  PieceBuild in = build_piece(node->piece, adj, interior, tri, /*tri_as_outer=*/true);
  PieceBuild outp = build_piece(node->piece, adj, ext, tri, /*tri_as_outer=*/false);
  require_valid(in.piece);
  require_valid(outp.piece);

  // Compose maps so that every node also refers to the original input.
  auto compose = [&](PieceBuild& pb) {
    std::vector<int> v(pb.vmap.size()), f(pb.fmap.size());
    for (std::size_t k = 0; k < pb.vmap.size(); ++k)
      v[k] = node->vmap[static_cast<std::size_t>(pb.vmap[k])];
    for (std::size_t k = 0; k < pb.fmap.size(); ++k)
      f[k] = pb.fmap[k] < 0 ? -1 : node->fmap[static_cast<std::size_t>(pb.fmap[k])];
    return std::pair(std::move(v), std::move(f));
  };
  auto [vi, fi] = compose(in);
  auto [vo, fo] = compose(outp);

  node->split_local = tri;
  std::sort(node->split_local.begin(), node->split_local.end());
  node->split = {node->vmap[static_cast<std::size_t>(tri[0])],
                 node->vmap[static_cast<std::size_t>(tri[1])],
                 node->vmap[static_cast<std::size_t>(tri[2])]};
  std::sort(node->split.begin(), node->split.end());
  node->interior =
      decompose_rec(std::move(in.piece), std::move(vi), std::move(fi), std::move(in.vmap), std::move(in.fmap));
  node->exterior = decompose_rec(std::move(outp.piece), std::move(vo), std::move(fo),
                                 std::move(outp.vmap), std::move(outp.fmap));
  return node;
}

void collect_leaves(const DecompositionNode* node, std::vector<const DecompositionNode*>& out) {
  if (node->leaf()) {
    out.push_back(node);
    return;
  }
  collect_leaves(node->interior.get(), out);
  collect_leaves(node->exterior.get(), out);
}

}  // namespace

std::vector<const DecompositionNode*> DecompositionTree::leaves() const& {
  std::vector<const DecompositionNode*> out;
  if (root) collect_leaves(root.get(), out);
  return out;
}

DecompositionTree decompose(const PlaneTriangulation& t) {
  require_valid(t);
  std::vector<int> vmap(static_cast<std::size_t>(t.n));
  for (int v = 0; v < t.n; ++v) vmap[static_cast<std::size_t>(v)] = v;
  std::vector<int> fmap(t.inner_faces.size());
  for (std::size_t k = 0; k < fmap.size(); ++k) fmap[k] = static_cast<int>(k);
  DecompositionTree tree;
  tree.root = decompose_rec(t, vmap, fmap, vmap, fmap);
  return tree;
}

}  // namespace areal
