#include "nuclei/moves.hpp"

#include <deque>
#include <set>

#include "nuclei/error.hpp"

namespace nuclei {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kCut3Face: return "cut-a-3-face";
    case MoveKind::kOpen2Face: return "open-a-2-face";
    case MoveKind::kRemove1Tetra: return "remove-1-tetra";
    case MoveKind::kSplitNode: return "split-a-node";
    case MoveKind::kIdentify: return "identify";
    case MoveKind::kAddTetra: return "add-tetra";
    case MoveKind::kCollapse: return "collapse";
    case MoveKind::kCone: return "cone";
  }
  return "unknown";
}

MoveKind move_kind_from_string(const std::string& name) {
  for (MoveKind k : {MoveKind::kCut3Face, MoveKind::kOpen2Face, MoveKind::kRemove1Tetra,
                     MoveKind::kSplitNode, MoveKind::kIdentify, MoveKind::kAddTetra,
                     MoveKind::kCollapse, MoveKind::kCone})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::kParse, "unknown move kind '" + name + "'");
}

void require_ball(const Triangulation& t, const std::string& context) {
  auto report = validate_ball(t);
  if (report.ok()) return;
  for (const auto& c : report.checks)
    if (!c.passed) invariant_failure(context + ": " + c.name + " failed (" + c.detail + ")");
}

std::vector<NodeId> allocate_nodes(const std::vector<NodeId>& used, int count) {
  std::set<NodeId> taken(used.begin(), used.end());
  std::vector<NodeId> out;
  for (NodeId candidate = 1; static_cast<int>(out.size()) < count; ++candidate)
    if (!taken.count(candidate)) out.push_back(candidate);
  return out;
}

namespace {

std::optional<Face> carry_root(const Triangulation& before,
                               const std::vector<Tet>& after_tets) {
  if (!before.root()) return std::nullopt;
  Face key = sorted(*before.root());
  int owners = 0;
  for (const Tet& t : after_tets)
    if (contains(t, key[0]) && contains(t, key[1]) && contains(t, key[2])) ++owners;
  return owners == 1 ? before.root() : std::nullopt;
}

Triangulation rebuild(const Triangulation& before, std::vector<Tet> tets) {
  auto root = carry_root(before, tets);
  return Triangulation(std::move(tets), root);
}

void check_delta(const FVector& before, const FVector& after, const FDelta& want,
                 const std::string& move) {
  FDelta got = after - before;
  if (got != want)
    invariant_failure(move + " changed the f-vector by " + got.str() + ", expected " +
                      want.str());
}

// Shared body of split-a-node and open-a-2-face. With `bridge`, one
// tetrahedron (L, R, e) is added for every edge e of the path.
MoveResult split_impl(const Triangulation& t, NodeId n_star,
                      const std::vector<NodeId>& path, bool bridge,
                      MoveKind kind) {
  if (!t.has_node(n_star))
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(n_star));
  if (!t.is_external_node(n_star))
    throw Error(ErrorCode::kNotExternal, "node " + std::to_string(n_star) + " is internal");
  NodeFlower fl = flower(t, n_star);
  require_splitting_path(fl.hemisphere, path);
  DiskCut pieces = cut_disk(fl.hemisphere, path, Label::sequence("L"),
                            Label::sequence("R"));

  std::vector<NodeId> used;
  for (NodeId n : t.nodes())
    if (n != n_star) used.push_back(n);
  auto fresh = allocate_nodes(used, 2);
  const NodeId left = fresh[0];
  const NodeId right = fresh[1];

  std::vector<Tet> tets;
  for (const Tet& tet : t.tets())
    if (!contains(tet, n_star)) tets.push_back(tet);
  for (const Face& f : pieces.left.triangles()) tets.push_back(make_tet(left, f[0], f[1], f[2]));
  for (const Face& f : pieces.right.triangles()) tets.push_back(make_tet(right, f[0], f[1], f[2]));
  if (bridge)
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      tets.push_back(make_tet(left, right, path[i], path[i + 1]));

  MoveRecord record;
  record.kind = kind;
  record.args.push_back(n_star);
  record.args.insert(record.args.end(), path.begin(), path.end());
  record.created = {left, right};
  record.delta = bridge ? FDelta{static_cast<long>(path.size()) - 1, 2, 0} : FDelta{0, 2, 0};

  Triangulation result = rebuild(t, std::move(tets));
  require_ball(result, to_string(kind));
  check_delta(f_vector(t), f_vector(result), record.delta, to_string(kind));
  return {std::move(result), std::move(record)};
}

}  // namespace

CutResult cut_a_3_face(const Triangulation& t, const Face& face) {
  Face f = sorted(face);
  auto it = t.face_tets().find(f);
  if (it == t.face_tets().end())
    throw Error(ErrorCode::kUnknownFace, "face " + to_string(f));
  if (it->second.size() != 2)
    throw Error(ErrorCode::kNotInternal, "face " + to_string(f) + " is external");
  for (const Edge& e : edges_of(f))
    if (!t.is_external(e))
      throw Error(ErrorCode::kHasInternalEdge,
                  "face " + to_string(f) + " has internal edge " + to_string(e));

  const auto& tets = t.tets();
  std::vector<int> side(tets.size(), -1);
  std::deque<std::size_t> queue{0};
  side[0] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (const Face& g : faces_of(tets[u])) {
      if (g == f) continue;
      for (auto v : t.face_tets().at(g))
        if (side[v] < 0) {
          side[v] = 0;
          queue.push_back(v);
        }
    }
  }
  std::vector<Tet> a;
  std::vector<Tet> b;
  for (std::size_t i = 0; i < tets.size(); ++i) (side[i] == 0 ? a : b).push_back(tets[i]);
  if (b.empty()) invariant_failure("face " + to_string(f) + " does not separate the ball");

  CutResult out{rebuild(t, std::move(a)), rebuild(t, std::move(b)), {}};
  // The second part keeps no root unless the root face lives there.
  if (t.root() && !out.first.root()) out.second = out.second.with_root(carry_root(t, out.second.tets()));
  if (t.root() && out.first.root()) out.second = out.second.with_root(std::nullopt);
  require_ball(out.first, "cut-a-3-face");
  require_ball(out.second, "cut-a-3-face");

  FVector v = f_vector(t);
  FVector v1 = f_vector(out.first);
  FVector v2 = f_vector(out.second);
  if (v.t != v1.t + v2.t || v.f_s != v1.f_s + v2.f_s - 2 || v.n_i != v1.n_i + v2.n_i)
    invariant_failure("cut-a-3-face conservation identities fail");
  out.record.kind = MoveKind::kCut3Face;
  out.record.args = {f[0], f[1], f[2]};
  out.record.delta = {v1.t + v2.t - v.t, v1.f_s + v2.f_s - v.f_s, v1.n_i + v2.n_i - v.n_i};
  return out;
}

MoveResult open_a_2_face(const Triangulation& t, NodeId n_star, NodeId n1, NodeId n2) {
  Face f = make_face(n_star, n1, n2);
  if (n_star == n1 || n_star == n2 || n1 == n2)
    throw Error(ErrorCode::kRepeatedNode, "face " + to_string(f));
  auto it = t.face_tets().find(f);
  if (it == t.face_tets().end())
    throw Error(ErrorCode::kUnknownFace, "face " + to_string(f));
  if (it->second.size() != 2)
    throw Error(ErrorCode::kNotInternal, "face " + to_string(f) + " is external");
  if (!t.is_external_node(n_star))
    throw Error(ErrorCode::kNotExternal, "node " + std::to_string(n_star) + " is internal");
  bool e12 = t.is_external(make_edge(n1, n2));
  bool e1 = t.is_external(make_edge(n_star, n1));
  bool e2 = t.is_external(make_edge(n_star, n2));
  if (e12 && e1 && e2)
    throw Error(ErrorCode::kBadEdgePattern,
                "face " + to_string(f) + " has 3 external edges (cut-a-3-face applies)");
  if (e12)
    throw Error(ErrorCode::kBadEdgePattern,
                "edge " + to_string(make_edge(n1, n2)) + " must be internal");
  if (!e1 || !e2)
    throw Error(ErrorCode::kBadEdgePattern,
                "edges from " + std::to_string(n_star) + " must both be external");
  auto result = split_impl(t, n_star, {n1, n2}, false, MoveKind::kOpen2Face);
  result.record.args = {n_star, n1, n2};
  return result;
}

bool is_removable(const Triangulation& t, const Tet& tet) {
  int internal = 0;
  NodeId x = 0;
  for (NodeId n : tet)
    if (!t.is_external_node(n)) {
      ++internal;
      x = n;
    }
  return internal == 1 && t.is_external(opposite_face(tet, x));
}

std::vector<Tet> removable_tetrahedra(const Triangulation& t) {
  std::vector<Tet> out;
  for (const Tet& tet : t.tets())
    if (is_removable(t, tet)) out.push_back(tet);
  return out;
}

MoveResult remove_1_tetra(const Triangulation& t, const Tet& tet) {
  Tet key = sorted(tet);
  if (!t.has_tet(key))
    throw Error(ErrorCode::kNotRemovable, "tetrahedron " + to_string(key) + " is absent");
  if (!is_removable(t, key))
    throw Error(ErrorCode::kNotRemovable,
                "tetrahedron " + to_string(key) +
                    " needs exactly one internal node opposite an external face");
  std::vector<Tet> tets;
  for (const Tet& other : t.tets())
    if (other != key) tets.push_back(other);
  MoveResult out{rebuild(t, std::move(tets)), {}};
  out.record.kind = MoveKind::kRemove1Tetra;
  out.record.args = {key[0], key[1], key[2], key[3]};
  out.record.delta = {-1, 2, -1};
  require_ball(out.result, "remove-1-tetra");
  check_delta(f_vector(t), f_vector(out.result), out.record.delta, "remove-1-tetra");
  return out;
}

MoveResult split_node(const Triangulation& t, NodeId n_star,
                      const std::vector<NodeId>& path) {
  return split_impl(t, n_star, path, true, MoveKind::kSplitNode);
}

}  // namespace nuclei
