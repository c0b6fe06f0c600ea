#include "areal/porder.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace areal {

namespace {

int third_vertex(const FaceTriple& f, int u, int v) {
  for (int x : f)
    if (x != u && x != v) return x;
  throw std::logic_error("third_vertex: degenerate face");
}

// Rotates f so that v comes last; f must contain v.
FaceTriple rotate_last(const FaceTriple& f, int v) {
  for (int k = 0; k < 3; ++k)
    if (f[k] == v) return {f[(k + 1) % 3], f[(k + 2) % 3], v};
  throw std::logic_error("rotate_last: vertex not on face");
}

struct NameResult {
  ConstructionStep step;
  int quad_replaced_index = -1;  // index of pm in the running quad
};

// Names the predecessors of v from the two faces of t spanned by v and two
// of its predecessors, and checks that they form a path along the current
// quadrilateral with pm in the middle.
std::optional<NameResult> try_name(const PlaneTriangulation& t, const Adjacency& adj, int v,
                                   const std::set<int>& preds, const std::array<int, 4>& quad,
                                   std::string* why) {
  std::vector<int> hits;
  for (int id : adj.faces_of_vertex(v)) {
    const FaceTriple& f = t.face(id);
    bool all = true;
    for (int x : f)
      if (x != v && !preds.count(x)) all = false;
    if (all) hits.push_back(id);
  }
  if (hits.size() != 2) {
    if (why) {
      std::ostringstream os;
      os << "vertex " << v << ": found " << hits.size()
         << " faces spanned by the predecessors, expected 2";
      *why = os.str();
    }
    return std::nullopt;
  }
  FaceTriple fa = rotate_last(t.face(hits[0]), v);
  FaceTriple fb = rotate_last(t.face(hits[1]), v);
  // The shared predecessor is the middle one; the face listing it second is
  // (pf, pm, v), the other is (pm, pl, v).
  int pm = -1;
  for (int x : {fa[0], fa[1]})
    if (x == fb[0] || x == fb[1]) pm = x;
  if (pm < 0 || (fa[1] == pm) == (fb[1] == pm)) {
    if (why) *why = "vertex " + std::to_string(v) + ": predecessor faces do not share a middle vertex";
    return std::nullopt;
  }
  if (fb[1] == pm) std::swap(fa, fb);
  ConstructionStep step;
  step.vertex = v;
  step.pf = fa[0];
  step.pm = pm;
  step.pl = fb[1];
  // face_a is the hit whose rotated form reads (pf, pm, v).
  for (int id : hits) {
    FaceTriple r = rotate_last(t.face(id), v);
    if (r[1] == pm)
      step.face_a = id;
    else
      step.face_b = id;
  }

  // pf, pm, pl must sit consecutively on the quad with pm in the middle.
  int j = -1;
  for (int k = 0; k < 4; ++k)
    if (quad[static_cast<std::size_t>(k)] == pm) j = k;
  if (j < 0) {
    if (why) *why = "vertex " + std::to_string(v) + ": middle predecessor not on the open quadrilateral";
    return std::nullopt;
  }
  int left = quad[static_cast<std::size_t>((j + 3) % 4)];
  int right = quad[static_cast<std::size_t>((j + 1) % 4)];
  if (!((left == step.pf && right == step.pl) || (left == step.pl && right == step.pf))) {
    if (why) *why = "vertex " + std::to_string(v) + ": predecessors are not a path of the quadrilateral";
    return std::nullopt;
  }
  return NameResult{step, j};
}

POrder from_order(const PlaneTriangulation& t, const Adjacency& adj, const std::vector<int>& order,
                  std::optional<std::array<int, 2>> hint) {
  const int n = t.n;
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("porder_from_order: order length differs from vertex count");
  if (n < 4) throw std::invalid_argument("porder_from_order: needs at least four vertices");
  POrder po;
  po.order = order;
  po.pos.assign(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    int v = order[static_cast<std::size_t>(k)];
    if (v < 0 || v >= n || po.pos[static_cast<std::size_t>(v)] != 0)
      throw std::invalid_argument("porder_from_order: order is not a permutation");
    po.pos[static_cast<std::size_t>(v)] = k + 1;
  }

  const int v1 = order[0], v2 = order[1], v3 = order[2], v4 = order[3];
  int f_base4 = adj.face_with_directed_edge(v1, v2);
  int f0 = adj.face_with_directed_edge(v2, v1);
  if (f_base4 < 0 || f0 < 0) throw std::invalid_argument("porder_from_order: v1v2 is not an edge");
  if (third_vertex(t.face(f_base4), v1, v2) != v4)
    throw std::invalid_argument("porder_from_order: the face traversing v1->v2 does not contain v4");
  if (third_vertex(t.face(f0), v1, v2) != v3)
    throw std::invalid_argument("porder_from_order: the face traversing v2->v1 does not contain v3");
  po.face0 = f0;
  po.face_base4 = f_base4;

  std::set<std::array<int, 2>> oriented;
  auto orient = [&](int a, int b) {
    oriented.insert({std::min(a, b), std::max(a, b)});
  };
  orient(v1, v2);
  orient(v3, v1);
  orient(v3, v2);
  orient(v4, v1);
  orient(v4, v2);

  std::array<int, 4> quad{v1, v4, v2, v3};

  auto finish = [&](std::set<std::array<int, 2>> edges_oriented) -> std::optional<std::array<int, 2>> {
    std::vector<std::array<int, 2>> unoriented;
    for (const auto& e : adj.edges())
      if (!edges_oriented.count(e)) unoriented.push_back(e);
    if (unoriented.size() != 1) return std::nullopt;
    return unoriented.front();
  };

  for (int idx = 4; idx < n; ++idx) {
    int v = order[static_cast<std::size_t>(idx)];
    std::vector<int> earlier;
    for (int u : adj.neighbors(v))
      if (po.pos[static_cast<std::size_t>(u)] < idx + 1) earlier.push_back(u);

    std::string why;
    if (static_cast<int>(earlier.size()) == 3) {
      std::set<int> preds(earlier.begin(), earlier.end());
      auto named = try_name(t, adj, v, preds, quad, &why);
      if (!named) throw std::invalid_argument("porder_from_order: " + why);
      po.steps.push_back(named->step);
      quad[static_cast<std::size_t>(named->quad_replaced_index)] = v;
      for (int u : earlier) orient(v, u);
    } else if (static_cast<int>(earlier.size()) == 4 && idx == n - 1) {
      // The last vertex keeps one earlier neighbor unoriented.
      std::vector<int> drops;
      if (hint) {
        int other = (*hint)[0] == v ? (*hint)[1] : ((*hint)[1] == v ? (*hint)[0] : -1);
        if (other < 0 || !std::count(earlier.begin(), earlier.end(), other))
          throw std::invalid_argument(
              "porder_from_order: hinted unoriented edge is not incident to the last vertex");
        drops = {other};
      } else {
        drops = earlier;
      }
      bool done = false;
      for (int drop : drops) {
        std::set<int> preds(earlier.begin(), earlier.end());
        preds.erase(drop);
        auto named = try_name(t, adj, v, preds, quad, &why);
        if (!named) continue;
        auto candidate = oriented;
        for (int u : preds) candidate.insert({std::min(v, u), std::max(v, u)});
        if (auto e = finish(candidate); e && (*e)[0] == std::min(v, drop) && (*e)[1] == std::max(v, drop)) {
          po.steps.push_back(named->step);
          quad[static_cast<std::size_t>(named->quad_replaced_index)] = v;
          oriented = std::move(candidate);
          done = true;
          break;
        }
      }
      if (!done)
        throw std::invalid_argument(
            "porder_from_order: no valid predecessor choice for the last vertex (" + why + ")");
    } else {
      throw std::invalid_argument("porder_from_order: vertex " + std::to_string(v) + " has " +
                                  std::to_string(earlier.size()) + " earlier neighbors");
    }
  }

  auto e = finish(oriented);
  if (!e)
    throw std::invalid_argument("porder_from_order: the predecessor relation does not leave exactly one edge unoriented");
  po.unoriented = *e;
  if (hint) {
    std::array<int, 2> h{std::min((*hint)[0], (*hint)[1]), std::max((*hint)[0], (*hint)[1])};
    if (h != po.unoriented)
      throw std::invalid_argument("porder_from_order: unoriented edge differs from the hint");
  }

  auto [fa, fb] = adj.faces_of_edge(po.unoriented[0], po.unoriented[1]);
  // Prefer an inner face as the analysis target; between two inner faces
  // take the one whose third vertex comes earlier in the order, which is the
  // choice the degree analysis of the families is stated for.
  auto pick = [&](int x, int y) {
    if (t.is_outer(x)) return std::pair(y, x);
    if (t.is_outer(y)) return std::pair(x, y);
    int tx = third_vertex(t.face(x), po.unoriented[0], po.unoriented[1]);
    int ty = third_vertex(t.face(y), po.unoriented[0], po.unoriented[1]);
    return po.pos[static_cast<std::size_t>(tx)] < po.pos[static_cast<std::size_t>(ty)]
               ? std::pair(x, y)
               : std::pair(y, x);
  };
  std::tie(po.face_a, po.face_b) = pick(fa, fb);
  return po;
}

std::optional<POrder> try_from_order(const PlaneTriangulation& t, const Adjacency& adj,
                                     const std::vector<int>& order,
                                     std::optional<std::array<int, 2>> hint) {
  try {
    return from_order(t, adj, order, hint);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Greedily peels vertices of degree three from t minus the edge e, in
// reverse order; `first` forces the first peeled vertex (ignored when n = 4).
// Returns the full vertex order with the base labeling, or nullopt.
std::optional<std::vector<int>> peel_order(const PlaneTriangulation& t, const Adjacency& adj,
                                           std::array<int, 2> e, int first) {
  const int n = t.n;
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = adj.degree(v);
  deg[static_cast<std::size_t>(e[0])]--;
  deg[static_cast<std::size_t>(e[1])]--;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<int> order(static_cast<std::size_t>(n), -1);

  auto erase = [&](int v) {
    removed[static_cast<std::size_t>(v)] = true;
    for (int u : adj.neighbors(v)) {
      if (removed[static_cast<std::size_t>(u)]) continue;
      if ((v == e[0] && u == e[1]) || (v == e[1] && u == e[0])) continue;
      deg[static_cast<std::size_t>(u)]--;
    }
  };

  for (int idx = n - 1; idx >= 4; --idx) {
    int v = -1;
    if (idx == n - 1) {
      if (deg[static_cast<std::size_t>(first)] != 3) return std::nullopt;
      v = first;
    } else {
      for (int u = 0; u < n && v < 0; ++u)
        if (!removed[static_cast<std::size_t>(u)] && deg[static_cast<std::size_t>(u)] == 3) v = u;
      if (v < 0) return std::nullopt;
    }
    order[static_cast<std::size_t>(idx)] = v;
    erase(v);
  }

  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) rest.push_back(v);

  // The four remaining vertices must induce five edges in t minus e; the
  // non-adjacent pair becomes {v3, v4}.
  std::vector<std::pair<int, int>> missing;
  int present = 0;
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      int a = rest[i], b = rest[j];
      bool edge = adj.adjacent(a, b) && !(a == e[0] && b == e[1]);
      if (edge)
        present++;
      else
        missing.emplace_back(a, b);
    }
  if (present != 5 || missing.size() != 1) return std::nullopt;

  int x3 = missing.front().first, x4 = missing.front().second;  // x3 < x4
  std::vector<int> gh;
  for (int v : rest)
    if (v != x3 && v != x4) gh.push_back(v);
  int g = gh[0], h = gh[1];
  int f_gh = adj.face_with_directed_edge(g, h);
  int f_hg = adj.face_with_directed_edge(h, g);
  if (f_gh < 0 || f_hg < 0) return std::nullopt;
  int t_gh = third_vertex(t.face(f_gh), g, h);
  int t_hg = third_vertex(t.face(f_hg), g, h);
  if (!((t_gh == x4 && t_hg == x3) || (t_gh == x3 && t_hg == x4))) return std::nullopt;
  if (t_gh == x4) {
    order[0] = g;
    order[1] = h;
  } else {
    order[0] = h;
    order[1] = g;
  }
  order[2] = x3;
  order[3] = x4;
  return order;
}

}  // namespace

POrder porder_from_order(const PlaneTriangulation& t, const std::vector<int>& order,
                         std::optional<std::array<int, 2>> unoriented_hint) {
  Adjacency adj(t);
  return from_order(t, adj, order, unoriented_hint);
}

std::vector<ConstructionStep> name_predecessors(const PlaneTriangulation& t,
                                                const std::vector<int>& order) {
  return porder_from_order(t, order).steps;
}

UnorientedEdge unoriented_edge(const PlaneTriangulation& t, const std::vector<int>& order) {
  POrder po = porder_from_order(t, order);
  return {po.unoriented, po.face_a, po.face_b};
}

void for_each_porder(const PlaneTriangulation& t, const std::function<bool(POrder&&)>& fn) {
  if (t.n < 4) return;
  if (t.n > 4 && !separating_triangles(t).empty())
    throw std::invalid_argument("for_each_porder: triangulation is not 4-connected; decompose first");
  Adjacency adj(t);
  for (const auto& e : adj.edges()) {
    if (t.n == 4) {
      if (auto order = peel_order(t, adj, e, -1))
        if (auto po = try_from_order(t, adj, *order, e))
          if (!fn(std::move(*po))) return;
      continue;
    }
    for (int z : {e[0], e[1]}) {
      if (adj.degree(z) != 4) continue;
      auto order = peel_order(t, adj, e, z);
      if (!order) continue;
      if (auto po = try_from_order(t, adj, *order, e))
        if (!fn(std::move(*po))) return;
    }
  }
}

std::optional<POrder> find_porder(const PlaneTriangulation& t) {
  std::optional<POrder> out;
  for_each_porder(t, [&](POrder&& po) {
    out = std::move(po);
    return false;
  });
  return out;
}

std::vector<POrder> porder_candidates(const PlaneTriangulation& t) {
  std::vector<POrder> out;
  for_each_porder(t, [&](POrder&& po) {
    out.push_back(std::move(po));
    return true;
  });
  return out;
}

}  // namespace areal
