#include "areal/generators.hpp"

#include "areal/triangulation.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace areal {

namespace {

// The fixed embedding used for all octahedron-derived families:
//   outer triangle A, C, B (cw); spokes A-u, A-v, B-v, B-w, C-u, C-w;
//   central triangle u, v, w.
PlaneTriangulation octahedron_labeled(int n, int A, int B, int C, int u, int v, int w) {
  PlaneTriangulation t;
  t.n = n;
  t.inner_faces = {
      {A, B, v}, {A, v, u}, {A, u, C}, {B, w, v}, {B, C, w}, {C, u, w}, {u, v, w},
  };
  t.outer_face = {A, C, B};
  t.labels.assign(static_cast<std::size_t>(n), "");
  t.labels[static_cast<std::size_t>(A)] = "A";
  t.labels[static_cast<std::size_t>(B)] = "B";
  t.labels[static_cast<std::size_t>(C)] = "C";
  t.labels[static_cast<std::size_t>(u)] = "u";
  t.labels[static_cast<std::size_t>(v)] = "v";
  t.labels[static_cast<std::size_t>(w)] = "w";
  return t;
}

void replace_edge_with_ladder(PlaneTriangulation& t, int p, int q, const std::vector<int>& mids) {
  Adjacency adj(t);
  auto [f_pq, f_qp] = adj.faces_of_edge(p, q);
  if (t.is_outer(f_pq) || t.is_outer(f_qp))
    throw std::invalid_argument("diamondize: edge lies on the outer face");
  auto apex = [&](int face_id) {
    for (int x : t.face(face_id))
      if (x != p && x != q) return x;
    throw std::logic_error("apex not found");
  };
  int r = apex(f_pq);  // face traversing p -> q
  int s = apex(f_qp);  // face traversing q -> p

  std::vector<FaceTriple> faces;
  for (int id = 0; id < static_cast<int>(t.inner_faces.size()); ++id)
    if (id != f_pq && id != f_qp) faces.push_back(t.inner_faces[static_cast<std::size_t>(id)]);

  // Path p, mids..., q; every new vertex joined to both apexes.
  std::vector<int> path;
  path.push_back(p);
  path.insert(path.end(), mids.begin(), mids.end());
  path.push_back(q);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    faces.push_back({path[i], path[i + 1], r});
    faces.push_back({path[i + 1], path[i], s});
  }
  t.inner_faces = std::move(faces);
}

}  // namespace

PlaneTriangulation octahedron() { return octahedron_labeled(6, 0, 1, 2, 3, 4, 5); }

PlaneTriangulation k4() {
  PlaneTriangulation t;
  t.n = 4;
  t.inner_faces = {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
  t.outer_face = {0, 2, 1};
  return t;
}

PlaneTriangulation diamondize(const PlaneTriangulation& t, std::array<int, 2> e, int k) {
  require_valid(t);
  if (k < 0) throw std::invalid_argument("diamondize: negative order");
  if (k == 0) return t;
  PlaneTriangulation out = t;
  std::vector<int> mids;
  for (int i = 0; i < k; ++i) mids.push_back(t.n + i);
  out.n = t.n + k;
  if (!out.labels.empty())
    for (int i = 0; i < k; ++i) out.labels.push_back("d" + std::to_string(i + 1));
  replace_edge_with_ladder(out, e[0], e[1], mids);
  return out;
}

PlaneTriangulation stack(const PlaneTriangulation& t, int inner_face_id) {
  if (inner_face_id < 0 || inner_face_id >= static_cast<int>(t.inner_faces.size()))
    throw std::invalid_argument("stack: not an inner face");
  PlaneTriangulation out = t;
  FaceTriple f = t.inner_faces[static_cast<std::size_t>(inner_face_id)];
  int m = t.n;
  out.n = t.n + 1;
  if (!out.labels.empty()) out.labels.push_back(std::to_string(m));
  out.inner_faces.erase(out.inner_faces.begin() + inner_face_id);
  out.inner_faces.push_back({f[0], f[1], m});
  out.inner_faces.push_back({f[1], f[2], m});
  out.inner_faces.push_back({f[2], f[0], m});
  return out;
}

// Accordion ids. The numbering makes the plain candidate search peel the
// construction order used by the analysis: the ladder vertices and w get the
// small ids, the outer vertices and the surviving apex the large ones.
namespace acc {
inline int v(int) { return 0; }
inline int w(int) { return 1; }
inline int mid(int, int i) { return 1 + i; }  // i in 1..l
inline int B(int l) { return l + 2; }
inline int C(int l) { return l + 3; }
inline int A(int l) { return l + 4; }
inline int u(int l) { return l + 5; }
}  // namespace acc

PlaneTriangulation accordion(int l) {
  if (l < 0) throw std::invalid_argument("accordion: order must be nonnegative");
  PlaneTriangulation t = octahedron_labeled(l + 6, acc::A(l), acc::B(l), acc::C(l), acc::u(l),
                                            acc::v(l), acc::w(l));
  if (l == 0) return t;
  std::vector<int> mids;
  for (int i = 1; i <= l; ++i) {
    mids.push_back(acc::mid(l, i));
    t.labels[static_cast<std::size_t>(acc::mid(l, i))] = std::to_string(i);
  }
  replace_edge_with_ladder(t, acc::v(l), acc::w(l), mids);
  return t;
}

std::vector<int> accordion_order(int l) {
  std::vector<int> order{acc::C(l), acc::A(l), acc::B(l), acc::u(l), acc::w(l)};
  for (int i = l; i >= 1; --i) order.push_back(acc::mid(l, i));
  order.push_back(acc::v(l));
  return order;
}

std::array<int, 2> accordion_unoriented_edge(int l) { return {acc::v(l), acc::A(l)}; }

namespace ds {
inline int x(int, int, int j) { return j - 1; }        // j in 1..l-1
inline int z(int l, int, int j) { return l - 2 + j; }  // j in 1..k-1
inline int u(int l, int k) { return l + k - 2; }
inline int w(int l, int k) { return l + k - 1; }
inline int C(int l, int k) { return l + k; }
inline int B(int l, int k) { return l + k + 1; }
inline int v(int l, int k) { return l + k + 2; }
inline int A(int l, int k) { return l + k + 3; }
}  // namespace ds

PlaneTriangulation double_stacking(int l, int k) {
  if (l < 1 || k < 1) throw std::invalid_argument("double_stacking: parameters must be >= 1");
  PlaneTriangulation t = octahedron_labeled(l + k + 4, ds::A(l, k), ds::B(l, k), ds::C(l, k),
                                            ds::u(l, k), ds::v(l, k), ds::w(l, k));
  if (l >= 2) {
    std::vector<int> mids;
    for (int j = 1; j <= l - 1; ++j) {
      mids.push_back(ds::x(l, k, j));
      t.labels[static_cast<std::size_t>(ds::x(l, k, j))] = std::to_string(j);
    }
    replace_edge_with_ladder(t, ds::A(l, k), ds::u(l, k), mids);
  }
  if (k >= 2) {
    std::vector<int> mids;
    for (int j = 1; j <= k - 1; ++j) {
      mids.push_back(ds::z(l, k, j));
      t.labels[static_cast<std::size_t>(ds::z(l, k, j))] = std::to_string(j) + "'";
    }
    replace_edge_with_ladder(t, ds::v(l, k), ds::w(l, k), mids);
  }
  return t;
}

std::vector<int> double_stacking_order(int l, int k) {
  std::vector<int> order{ds::A(l, k), ds::B(l, k), ds::C(l, k), ds::v(l, k)};
  for (int j = 1; j <= l - 1; ++j) order.push_back(ds::x(l, k, j));
  order.push_back(ds::u(l, k));
  for (int j = 1; j <= k - 1; ++j) order.push_back(ds::z(l, k, j));
  order.push_back(ds::w(l, k));
  return order;
}

std::array<int, 2> double_stacking_unoriented_edge(int l, int k) {
  return {ds::w(l, k), ds::C(l, k)};
}

PlaneTriangulation stacked_3tree(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("stacked_3tree: need n >= 4");
  PlaneTriangulation t = k4();
  std::mt19937_64 rng(seed);
  while (t.n < n) {
    int face = static_cast<int>(rng() % t.inner_faces.size());
    t = stack(t, face);
  }
  return t;
}

PlaneTriangulation generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Octahedron:
      return octahedron();
    case FamilySpec::Kind::K4:
      return k4();
    case FamilySpec::Kind::Accordion:
      return accordion(spec.l);
    case FamilySpec::Kind::DoubleStacking:
      return double_stacking(spec.l, spec.k);
    case FamilySpec::Kind::Stacked:
      return stacked_3tree(spec.n, spec.seed);
  }
  throw std::logic_error("unknown family");
}

}  // namespace areal
