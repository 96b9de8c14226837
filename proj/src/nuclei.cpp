#include "nuclei/nuclei.hpp"

#include <deque>

#include "nuclei/error.hpp"
#include "nuclei/inverse.hpp"

namespace nuclei {
namespace {

int external_edge_count(const Triangulation& t, const Face& f) {
  int n = 0;
  for (const Edge& e : edges_of(f)) n += t.is_external(e) ? 1 : 0;
  return n;
}

std::optional<Face> first_face_with(const Triangulation& t, int external_edges) {
  for (const Face& f : t.internal_faces())
    if (external_edge_count(t, f) == external_edges) return f;
  return std::nullopt;
}

}  // namespace

bool is_nucleus(const Triangulation& t) {
  if (!t.internal_nodes().empty()) return false;
  for (const Face& f : t.internal_faces())
    if (external_edge_count(t, f) > 1) return false;
  return true;
}

bool is_tree_of_nuclei(const Triangulation& t) {
  if (!t.internal_nodes().empty()) return false;
  for (const Face& f : t.internal_faces())
    if (external_edge_count(t, f) == 2) return false;
  return true;
}

NucleusSplit split_into_nuclei(const Triangulation& t) {
  if (!t.internal_nodes().empty())
    throw Error(ErrorCode::kHasInternalNodes,
                std::to_string(t.internal_nodes().size()) + " internal nodes left");
  NucleusSplit out;
  std::vector<Triangulation> forest{t};

  while (auto f = first_face_with(forest[0], 2)) {
    const Triangulation& cur = forest[0];
    NodeId n_star = 0;
    for (NodeId n : *f) {
      auto rest = difference(*f, std::array<NodeId, 1>{n});
      if (!cur.is_external(make_edge(rest[0], rest[1]))) n_star = n;
    }
    auto rest = difference(*f, std::array<NodeId, 1>{n_star});
    MoveResult m = open_a_2_face(cur, n_star, rest[0], rest[1]);
    forest[0] = m.result;
    out.log.push_back(m.record);
  }

  Face root_face = forest[0].root() ? *forest[0].root() : forest[0].external_faces().front();
  std::vector<Face> cuts;
  for (std::size_t i = 0; i < forest.size(); ++i) {
    while (auto f = first_face_with(forest[i], 3)) {
      CutResult c = cut_a_3_face(forest[i], *f);
      c.record.target = static_cast<int>(i);
      forest[i] = c.first;
      forest.push_back(c.second);
      out.log.push_back(c.record);
      cuts.push_back(*f);
    }
  }

  for (std::size_t i = 0; i < forest.size(); ++i)
    if (forest[i].has_face(sorted(root_face))) out.root = static_cast<int>(i);

  // Each cut face lies in exactly two final pieces; orient from the root.
  std::vector<std::vector<std::pair<int, Face>>> adjacent(forest.size());
  for (const Face& f : cuts) {
    std::vector<int> owners;
    for (std::size_t i = 0; i < forest.size(); ++i)
      if (forest[i].has_face(f)) owners.push_back(static_cast<int>(i));
    ensure(owners.size() == 2, "cut face " + to_string(f) + " is not shared by two pieces");
    adjacent[owners[0]].push_back({owners[1], f});
    adjacent[owners[1]].push_back({owners[0], f});
  }
  std::vector<bool> seen(forest.size(), false);
  std::deque<int> queue{out.root};
  seen[out.root] = true;
  forest[out.root] = forest[out.root].with_root(root_face);
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    auto next = adjacent[p];
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [c, f] : next) {
      if (seen[c]) continue;
      seen[c] = true;
      forest[c] = forest[c].with_root(f);
      out.edges.push_back({p, c, f});
      queue.push_back(c);
    }
  }
  ensure(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }),
         "cut structure is not a tree");
  for (const auto& piece : forest)
    if (!is_nucleus(piece)) invariant_failure("split produced a non-nucleus piece");
  out.nuclei = std::move(forest);
  return out;
}

Decomposition decompose(const Triangulation& t, const ReducerOptions& options) {
  Decomposition out{eliminate_internal_nodes(t, options), {}, {}};
  out.split = split_into_nuclei(out.elimination.result);
  out.log = out.elimination.log;
  out.log.insert(out.log.end(), out.split.log.begin(), out.split.log.end());
  return out;
}

void apply_move(std::vector<Triangulation>& forest, const MoveRecord& r) {
  if (r.target < 0 || r.target >= static_cast<int>(forest.size()))
    throw Error(ErrorCode::kOutOfRange, "move target " + std::to_string(r.target));
  Triangulation& t = forest[r.target];
  const auto& a = r.args;
  auto need = [&](std::size_t n) {
    if (a.size() != n)
      throw Error(ErrorCode::kParse, to_string(r.kind) + " expects " + std::to_string(n) +
                                         " arguments");
  };
  switch (r.kind) {
    case MoveKind::kCut3Face: {
      need(3);
      CutResult c = cut_a_3_face(t, {a[0], a[1], a[2]});
      t = c.first;
      forest.push_back(c.second);
      return;
    }
    case MoveKind::kOpen2Face:
      need(3);
      t = open_a_2_face(t, a[0], a[1], a[2]).result;
      return;
    case MoveKind::kRemove1Tetra:
      need(4);
      t = remove_1_tetra(t, {a[0], a[1], a[2], a[3]}).result;
      return;
    case MoveKind::kSplitNode:
      if (a.size() < 3) throw Error(ErrorCode::kParse, "split needs a node and a path");
      t = split_node(t, a[0], {a.begin() + 1, a.end()}).result;
      return;
    case MoveKind::kIdentify:
      need(4);
      t = identify_faces(t, a[0], a[1], a[2], a[3]).result;
      return;
    case MoveKind::kAddTetra:
      need(1);
      t = add_tetra(t, a[0]).result;
      return;
    case MoveKind::kCollapse:
      need(2);
      t = collapse_edge(t, a[0], a[1]).result;
      return;
    case MoveKind::kCone:
      need(3);
      t = cone_ball(t, {a[0], a[1], a[2]}).result;
      return;
  }
}

std::vector<Triangulation> replay(const Triangulation& t, const std::vector<MoveRecord>& log) {
  std::vector<Triangulation> forest{t};
  for (const MoveRecord& r : log) apply_move(forest, r);
  for (auto& piece : forest) piece = piece.with_root(std::nullopt);
  return forest;
}

}  // namespace nuclei
