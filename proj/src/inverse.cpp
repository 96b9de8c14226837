#include "nuclei/inverse.hpp"

#include <algorithm>
#include <set>

#include "nuclei/error.hpp"

namespace nuclei {
namespace {

void check_delta(const Triangulation& before, const Triangulation& after,
                 const FDelta& want, const char* move) {
  FDelta got = f_vector(after) - f_vector(before);
  if (got != want)
    invariant_failure(std::string(move) + " changed the f-vector by " + got.str() +
                      ", expected " + want.str());
}

std::optional<Face> rename_root(const Triangulation& t, NodeId from, NodeId to) {
  if (!t.root()) return std::nullopt;
  Face r = *t.root();
  for (NodeId& n : r)
    if (n == from) n = to;
  if (r[0] == r[1] || r[0] == r[2] || r[1] == r[2]) return std::nullopt;
  return r;
}

std::set<Face> link_triangles(const Triangulation& t, NodeId n) {
  std::set<Face> out;
  for (auto i : t.node_tets().at(n)) out.insert(opposite_face(t.tets()[i], n));
  return out;
}

}  // namespace

MoveResult identify_faces(const Triangulation& t, NodeId a, NodeId b, NodeId x,
                          NodeId y) {
  Edge e = make_edge(a, b);
  if (!t.has_edge(e)) throw Error(ErrorCode::kUnknownEdge, "edge " + to_string(e));
  if (!t.is_external(e))
    throw Error(ErrorCode::kNotExternal, "edge " + to_string(e) + " is internal");
  if (x == y || x == a || x == b || y == a || y == b)
    throw Error(ErrorCode::kRepeatedNode, "nodes must be four distinct ids");
  for (NodeId n : {x, y}) {
    Face f = make_face(n, a, b);
    if (!t.has_face(f) || !t.is_external(f))
      throw Error(ErrorCode::kNotExternal, "face " + to_string(f) + " is not external");
  }
  if (t.has_edge(make_edge(x, y)))
    throw Error(ErrorCode::kAdjacent,
                "nodes " + std::to_string(x) + " and " + std::to_string(y) + " are adjacent");
  auto nx = t.neighbors(x);
  auto ny = t.neighbors(y);
  std::vector<NodeId> common;
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                        std::back_inserter(common));
  for (NodeId m : common)
    if (m != a && m != b)
      throw Error(ErrorCode::kCommonNeighbor,
                  "nodes " + std::to_string(x) + " and " + std::to_string(y) +
                      " share neighbor " + std::to_string(m));

  NodeId keep = std::min(x, y);
  NodeId gone = std::max(x, y);
  std::vector<Tet> tets;
  for (Tet tet : t.tets()) {
    for (NodeId& n : tet)
      if (n == gone) n = keep;
    tets.push_back(tet);
  }
  MoveResult out{Triangulation(std::move(tets), rename_root(t, gone, keep)), {}};
  out.record.kind = MoveKind::kIdentify;
  out.record.args = {a, b, x, y};
  out.record.delta = {0, -2, 0};
  require_ball(out.result, "identify");
  check_delta(t, out.result, out.record.delta, "identify");
  return out;
}

MoveResult add_tetra(const Triangulation& t, NodeId x) {
  if (!t.has_node(x)) throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(x));
  if (!t.is_external_node(x))
    throw Error(ErrorCode::kBadDegree, "node " + std::to_string(x) + " is internal");
  auto ring = flower(t, x).external;
  if (ring.size() != 3)
    throw Error(ErrorCode::kBadDegree, "node " + std::to_string(x) +
                                           " has external degree " +
                                           std::to_string(ring.size()));
  Face cap = make_face(ring[0], ring[1], ring[2]);
  if (t.has_face(cap))
    throw Error(ErrorCode::kFaceMultiplicity,
                "face " + to_string(cap) + " already belongs to the triangulation");
  std::vector<Tet> tets = t.tets();
  tets.push_back(make_tet(x, cap[0], cap[1], cap[2]));
  auto root = t.root();
  if (root && contains(*root, x)) root.reset();
  MoveResult out{Triangulation(std::move(tets), root), {}};
  out.record.kind = MoveKind::kAddTetra;
  out.record.args = {x};
  out.record.delta = {1, -2, 1};
  require_ball(out.result, "add-tetra");
  check_delta(t, out.result, out.record.delta, "add-tetra");
  return out;
}

MoveResult collapse_edge(const Triangulation& t, NodeId a, NodeId b) {
  Edge e = make_edge(a, b);
  if (!t.has_edge(e)) throw Error(ErrorCode::kUnknownEdge, "edge " + to_string(e));
  if (!t.is_external(e))
    throw Error(ErrorCode::kNotExternal, "edge " + to_string(e) + " is internal");

  auto la = link_triangles(t, a);
  auto lb = link_triangles(t, b);
  std::set<NodeId> va, vb;
  std::set<Edge> ea, eb;
  for (const Face& f : la) {
    va.insert(f.begin(), f.end());
    for (const Edge& g : edges_of(f)) ea.insert(g);
  }
  for (const Face& f : lb) {
    vb.insert(f.begin(), f.end());
    for (const Edge& g : edges_of(f)) eb.insert(g);
  }
  std::set<NodeId> ve;
  std::set<Edge> ee;
  for (auto i : t.edge_tets().at(e)) {
    Edge g = opposite_edge(t.tets()[i], e);
    ve.insert(g.begin(), g.end());
    ee.insert(g);
  }
  std::set<NodeId> vab;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::inserter(vab, vab.begin()));
  vab.erase(a);
  vab.erase(b);
  if (vab != ve)
    throw Error(ErrorCode::kCollapseVertexSets,
                "common neighbors of " + std::to_string(a) + " and " + std::to_string(b) +
                    " differ from the nodes of I" + to_string(e));
  std::set<Edge> eab;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::inserter(eab, eab.begin()));
  if (eab != ee)
    throw Error(ErrorCode::kCollapseEdgeSets,
                "common link edges of " + std::to_string(a) + " and " + std::to_string(b) +
                    " differ from the edges of I" + to_string(e));
  for (const Face& f : la)
    if (lb.count(f))
      throw Error(ErrorCode::kCollapseFaceSets,
                  "links of " + std::to_string(a) + " and " + std::to_string(b) +
                      " share triangle " + to_string(f));

  NodeId keep = std::min(a, b);
  NodeId gone = std::max(a, b);
  std::vector<Tet> tets;
  for (Tet tet : t.tets()) {
    if (contains(tet, a) && contains(tet, b)) continue;
    for (NodeId& n : tet)
      if (n == gone) n = keep;
    tets.push_back(tet);
  }
  MoveResult out{Triangulation(std::move(tets), rename_root(t, gone, keep)), {}};
  out.record.kind = MoveKind::kCollapse;
  out.record.args = {a, b};
  out.record.delta = {-static_cast<long>(ee.size()), -2, 0};
  require_ball(out.result, "collapse");
  check_delta(t, out.result, out.record.delta, "collapse");
  return out;
}

MoveResult cone_ball(const Triangulation& t, const Face& keep) {
  Face k = sorted(keep);
  if (!t.has_face(k)) throw Error(ErrorCode::kUnknownFace, "face " + to_string(k));
  if (!t.is_external(k))
    throw Error(ErrorCode::kNotExternal, "face " + to_string(k) + " is internal");
  NodeId apex = t.fresh_node();
  std::vector<Tet> tets = t.tets();
  for (const Face& f : t.external_faces())
    if (f != k) tets.push_back(make_tet(apex, f[0], f[1], f[2]));
  auto root = t.root();
  if (root && sorted(*root) != k) root.reset();
  MoveResult out{Triangulation(std::move(tets), root), {}};
  out.record.kind = MoveKind::kCone;
  out.record.args = {k[0], k[1], k[2]};
  out.record.created = {apex};
  FVector before = f_vector(t);
  out.record.delta = {before.f_s - 1, 4 - before.f_s, before.n_s - 3};
  require_ball(out.result, "cone");
  check_delta(t, out.result, out.record.delta, "cone");
  return out;
}

}  // namespace nuclei
