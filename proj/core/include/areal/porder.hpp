#pragma once

#include "areal/triangulation.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace areal {

// One vertex insertion: v is placed against its three predecessors so that
// the stored faces face_a = (pf, pm, v) and face_b = (pm, pl, v) of the host
// triangulation receive their prescribed areas.
struct ConstructionStep {
  int vertex = -1;
  int pf = -1, pm = -1, pl = -1;
  int face_a = -1, face_b = -1;  // face ids in the host triangulation
};

// A predecessor order: v1..vn with pred(v1) = {}, pred(v2) = {v1},
// pred(v3) = pred(v4) = {v1, v2} and exactly three predecessors for every
// later vertex. Exactly one edge is left unoriented by the predecessor
// relation; its two incident faces are the ones whose area equations the
// induced placement cannot pin down.
struct POrder {
  std::vector<int> order;  // order[k] = vertex at position k+1
  std::vector<int> pos;    // pos[v] = 1-based position of vertex v
  std::vector<ConstructionStep> steps;  // positions 5..n in order
  std::array<int, 2> unoriented{{-1, -1}};  // sorted
  int face_a = -1;  // analysis target among the two faces at the unoriented edge
  int face_b = -1;  // residual face
  int face0 = -1;       // face on {v1, v2, v3}
  int face_base4 = -1;  // face on {v1, v2, v4}

  int n() const { return static_cast<int>(order.size()); }
  int vertex_at(int position) const { return order[static_cast<std::size_t>(position - 1)]; }
};

/// Builds the full POrder for a given vertex order, deriving predecessor
/// names from the faces of t. When the last vertex has four earlier
/// neighbors, `unoriented_hint` selects which incident edge stays unoriented;
/// without a hint the candidates are tried by ascending neighbor id.
/// Throws std::invalid_argument with a reason if the order is not a valid
/// predecessor order.
POrder porder_from_order(const PlaneTriangulation& t, const std::vector<int>& order,
                         std::optional<std::array<int, 2>> unoriented_hint = std::nullopt);

/// Predecessor naming only; see porder_from_order for the contract.
std::vector<ConstructionStep> name_predecessors(const PlaneTriangulation& t,
                                                const std::vector<int>& order);

struct UnorientedEdge {
  std::array<int, 2> edge;
  int face_a = -1, face_b = -1;
};

/// The unique edge not oriented by the predecessor relation plus its two
/// incident faces. Throws if the count differs from one.
UnorientedEdge unoriented_edge(const PlaneTriangulation& t, const std::vector<int>& order);

/// Deterministic enumeration of predecessor orders: candidate edges in
/// lexicographic order, for each edge the two possible last vertices by id,
/// peeling vertices of degree three (smallest id first). The callback
/// returns false to stop early. Requires a valid t that is 4-connected or
/// has n = 4; throws std::invalid_argument otherwise.
void for_each_porder(const PlaneTriangulation& t, const std::function<bool(POrder&&)>& fn);

/// First predecessor order of the enumeration, or nullopt if none exists.
std::optional<POrder> find_porder(const PlaneTriangulation& t);

/// All candidate predecessor orders of the enumeration.
std::vector<POrder> porder_candidates(const PlaneTriangulation& t);

}  // namespace areal
