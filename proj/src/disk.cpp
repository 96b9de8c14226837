#include "nuclei/disk.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "nuclei/error.hpp"

namespace nuclei {

Label Label::negative(int k) {
  ensure(k < 0, "negative label must be < 0");
  Label l;
  l.negative_ = k;
  return l;
}

Label Label::sequence(std::string word) {
  ensure(!word.empty() && word.find_first_not_of("LR") == std::string::npos,
         "sequence label must be a nonempty word over {L,R}");
  Label l;
  l.word_ = std::move(word);
  return l;
}

std::string Label::flip_last(std::string word) {
  ensure(!word.empty(), "cannot flip an empty word");
  word.back() = word.back() == 'L' ? 'R' : 'L';
  return word;
}

std::string Label::str() const {
  return is_negative() ? std::to_string(negative_) : word_;
}

std::vector<NodeId> normalize_cycle(std::vector<NodeId> cycle) {
  if (cycle.size() < 3) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::vector<NodeId> cycle_from_edges(const std::vector<Edge>& edges) {
  if (edges.size() < 3) return {};
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const Edge& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (const auto& [n, nb] : adj)
    if (nb.size() != 2) return {};
  std::vector<NodeId> cycle;
  NodeId start = adj.begin()->first;
  NodeId prev = 0;
  NodeId cur = start;
  do {
    cycle.push_back(cur);
    const auto& nb = adj[cur];
    NodeId next = nb[0] != prev ? nb[0] : nb[1];
    if (prev == 0) next = std::min(nb[0], nb[1]);
    prev = cur;
    cur = next;
  } while (cur != start && cycle.size() <= edges.size());
  if (cycle.size() != edges.size()) return {};
  return normalize_cycle(std::move(cycle));
}

Disk::Disk(std::vector<Face> triangles, std::map<NodeId, Label> labels)
    : labels_(std::move(labels)) {
  for (Face& f : triangles) f = sorted(f);
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()),
                  triangles.end());
  triangles_ = std::move(triangles);
  std::map<NodeId, std::set<NodeId>> adj;
  for (const Face& f : triangles_) {
    for (const Edge& e : edges_of(f)) {
      ++edge_count_[e];
      adj[e[0]].insert(e[1]);
      adj[e[1]].insert(e[0]);
    }
    for (NodeId n : f) nodes_.insert(n);
  }
  for (auto& [n, nb] : adj) adjacency_[n] = {nb.begin(), nb.end()};
  std::vector<Edge> rim;
  for (const auto& [e, c] : edge_count_) {
    if (c > 2) invariant_failure("edge " + to_string(e) + " in more than 2 triangles");
    if (c == 1) rim.push_back(e);
  }
  if (!rim.empty()) {
    boundary_ = cycle_from_edges(rim);
    if (boundary_.empty())
      invariant_failure("boundary edges do not form a single cycle");
  }
}

Disk Disk::with_labels(std::map<NodeId, Label> labels) const {
  Disk copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

bool Disk::is_boundary_node(NodeId n) const {
  return std::find(boundary_.begin(), boundary_.end(), n) != boundary_.end();
}

bool Disk::is_boundary_edge(const Edge& e) const {
  auto it = edge_count_.find(sorted(e));
  return it != edge_count_.end() && it->second == 1;
}

bool Disk::has_edge(const Edge& e) const {
  return edge_count_.count(sorted(e)) > 0;
}

std::vector<NodeId> Disk::interior_nodes() const {
  std::vector<NodeId> out;
  for (NodeId n : nodes_)
    if (!is_boundary_node(n)) out.push_back(n);
  return out;
}

std::vector<Edge> Disk::edges() const {
  std::vector<Edge> out;
  for (const auto& [e, _] : edge_count_) out.push_back(e);
  return out;
}

std::vector<Edge> Disk::interior_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, c] : edge_count_)
    if (c == 2) out.push_back(e);
  return out;
}

const std::vector<NodeId>& Disk::neighbors(NodeId n) const {
  static const std::vector<NodeId> kEmpty;
  auto it = adjacency_.find(n);
  return it == adjacency_.end() ? kEmpty : it->second;
}

std::vector<AdmissibilityViolation> check_admissible(const Disk& disk) {
  std::vector<AdmissibilityViolation> out;
  const auto& cycle = disk.boundary();
  const auto& labels = disk.labels();
  for (NodeId n : cycle)
    if (!labels.count(n))
      out.push_back({Condition::kUnlabeled, "node " + std::to_string(n)});
  if (!out.empty()) return out;

  std::set<Label> distinct;
  for (NodeId n : cycle) distinct.insert(labels.at(n));
  if (distinct.size() < 2)
    out.push_back({Condition::kK1, "boundary carries fewer than 2 labels"});

  std::map<Label, int> runs;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Label& here = labels.at(cycle[i]);
    const Label& before = labels.at(cycle[(i + cycle.size() - 1) % cycle.size()]);
    if (here != before) ++runs[here];
  }
  for (const auto& [label, count] : runs)
    if (count > 1)
      out.push_back({Condition::kK2, "label " + label.str() + " forms " +
                                         std::to_string(count) + " arcs"});

  for (const Edge& e : disk.edges()) {
    if (disk.is_boundary_edge(e)) continue;
    if (!disk.is_boundary_node(e[0]) || !disk.is_boundary_node(e[1])) continue;
    if (labels.at(e[0]) == labels.at(e[1]))
      out.push_back({Condition::kK3, "chord " + to_string(e) +
                                         " joins two nodes labeled " +
                                         labels.at(e[0]).str()});
  }
  return out;
}

namespace {

std::string path_error(const SplittingPath& path, const Disk& disk) {
  if (path.size() < 2) return "path needs at least 2 nodes";
  std::set<NodeId> seen(path.begin(), path.end());
  if (seen.size() != path.size()) return "path is not simple";
  if (path.front() == path.back()) return "endpoints coincide";
  if (!disk.is_boundary_node(path.front()) || !disk.is_boundary_node(path.back()))
    return "endpoints must lie on the boundary";
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Edge e = make_edge(path[i], path[i + 1]);
    if (!disk.has_edge(e)) return "edge " + to_string(e) + " is not in the disk";
    if (disk.is_boundary_edge(e))
      return "edge " + to_string(e) + " lies on the boundary";
  }
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (disk.is_boundary_node(path[i]))
      return "inner node " + std::to_string(path[i]) + " lies on the boundary";
  return {};
}

}  // namespace

void require_splitting_path(const Disk& disk, const SplittingPath& path) {
  std::string err = path_error(path, disk);
  if (!err.empty()) throw Error(ErrorCode::kBadPath, to_string(path) + ": " + err);
}

bool is_splitting_path(const Disk& disk, const SplittingPath& path) {
  return path_error(path, disk).empty();
}

std::vector<NodeId> shortest_interior_path(const Disk& disk, NodeId from,
                                           NodeId to,
                                           const std::set<NodeId>& blocked) {
  auto passable = [&](NodeId n) {
    return !disk.is_boundary_node(n) && !blocked.count(n);
  };
  std::map<NodeId, int> dist;
  dist[to] = 0;
  std::deque<NodeId> queue{to};
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : disk.neighbors(u)) {
      if (dist.count(v)) continue;
      if (v == from) {
        if (u == to && disk.is_boundary_edge(make_edge(u, v))) continue;
        dist[v] = dist[u] + 1;
        continue;
      }
      if (!passable(v)) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  if (!dist.count(from)) return {};
  std::vector<NodeId> path{from};
  NodeId cur = from;
  while (cur != to) {
    NodeId best = 0;
    for (NodeId v : disk.neighbors(cur)) {
      auto it = dist.find(v);
      if (it == dist.end() || it->second != dist[cur] - 1) continue;
      if (v != to && !passable(v)) continue;
      if (v == to && cur == from && disk.is_boundary_edge(make_edge(cur, v))) continue;
      if (best == 0 || v < best) best = v;
    }
    ensure(best != 0, "shortest path reconstruction failed");
    path.push_back(best);
    cur = best;
  }
  return path;
}

SplittingPath find_splitting_path(const Disk& disk) {
  if (disk.triangles().size() < 2)
    throw Error(ErrorCode::kTooFewTriangles, "disk has fewer than 2 triangles");
  auto violations = check_admissible(disk);
  if (!violations.empty())
    throw Error(ErrorCode::kNotAdmissible, violations.front().detail);

  for (const Edge& e : disk.interior_edges())
    if (disk.is_boundary_node(e[0]) && disk.is_boundary_node(e[1]))
      return {e[0], e[1]};

  const auto& labels = disk.labels();
  std::vector<NodeId> rim(disk.boundary().begin(), disk.boundary().end());
  std::sort(rim.begin(), rim.end());
  SplittingPath best;
  for (std::size_t i = 0; i < rim.size(); ++i) {
    for (std::size_t j = i + 1; j < rim.size(); ++j) {
      if (labels.at(rim[i]) == labels.at(rim[j])) continue;
      auto path = shortest_interior_path(disk, rim[i], rim[j]);
      if (path.empty()) continue;
      if (best.empty() || path.size() < best.size() ||
          (path.size() == best.size() && path < best))
        best = std::move(path);
    }
  }
  ensure(!best.empty(), "admissible disk without a splitting path");
  return best;
}

DiskCut cut_disk(const Disk& disk, const SplittingPath& path,
                 const Label& left_label, const Label& right_label) {
  require_splitting_path(disk, path);
  std::set<Edge> cut;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    cut.insert(make_edge(path[i], path[i + 1]));

  const auto& tris = disk.triangles();
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (const Edge& e : edges_of(tris[i])) by_edge[e].push_back(i);

  std::vector<int> side(tris.size(), -1);
  int components = 0;
  for (std::size_t seed = 0; seed < tris.size(); ++seed) {
    if (side[seed] >= 0) continue;
    std::deque<std::size_t> queue{seed};
    side[seed] = components;
    while (!queue.empty()) {
      std::size_t t = queue.front();
      queue.pop_front();
      for (const Edge& e : edges_of(tris[t])) {
        if (cut.count(e)) continue;
        for (std::size_t u : by_edge[e])
          if (side[u] < 0) {
            side[u] = components;
            queue.push_back(u);
          }
      }
    }
    ++components;
  }
  if (components != 2)
    throw Error(ErrorCode::kBadPath, to_string(path) + " splits the disk into " +
                                         std::to_string(components) + " parts");

  std::set<NodeId> on_path(path.begin(), path.end());
  NodeId anchor = 0;
  for (NodeId n : disk.boundary())
    if (!on_path.count(n) && (anchor == 0 || n < anchor)) anchor = n;
  int left_side = -1;
  for (std::size_t i = 0; i < tris.size() && left_side < 0; ++i)
    if (contains(tris[i], anchor)) left_side = side[i];
  ensure(left_side >= 0, "cut anchor not found");

  auto build = [&](int which, const Label& fresh) {
    std::vector<Face> part;
    for (std::size_t i = 0; i < tris.size(); ++i)
      if (side[i] == which) part.push_back(tris[i]);
    Disk piece(std::move(part));
    std::map<NodeId, Label> labels;
    for (const auto& [n, l] : disk.labels())
      if (piece.has_node(n)) labels[n] = l;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) labels[path[i]] = fresh;
    return piece.with_labels(std::move(labels));
  };
  return {build(left_side, left_label), build(1 - left_side, right_label)};
}

DiskCut cut_disk(const Disk& disk, const SplittingPath& path,
                 const Label& fresh_label) {
  return cut_disk(disk, path, fresh_label, fresh_label);
}

namespace {

// Residual network for unit-capacity vertex-disjoint path search.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n) {}

  void add_arc(int from, int to, int capacity) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  bool augment(int source, int sink) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      int u = queue.front();
      queue.pop_front();
      for (int a : adj_[u]) {
        int v = arcs_[a].to;
        if (seen[v] || arcs_[a].capacity <= 0) continue;
        seen[v] = true;
        via[v] = a;
        queue.push_back(v);
      }
    }
    if (!seen[sink]) return false;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].capacity -= 1;
      arcs_[via[v] ^ 1].capacity += 1;
    }
    return true;
  }

  // Arcs out of `u` that carry one unit of flow (forward arcs only).
  std::vector<int> used_successors(int u) const {
    std::vector<int> out;
    for (int a : adj_[u])
      if ((a % 2) == 0 && arcs_[a ^ 1].capacity > 0) out.push_back(a);
    return out;
  }
  int head(int arc) const { return arcs_[arc].to; }
  void consume(int arc) { arcs_[arc ^ 1].capacity -= 1; }

 private:
  struct Arc {
    int to;
    int capacity;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::vector<std::vector<NodeId>> vertex_disjoint_paths(
    const std::map<NodeId, std::vector<NodeId>>& adjacency, NodeId source,
    const std::set<NodeId>& targets, const std::set<NodeId>& blocked,
    int count) {
  std::map<NodeId, int> index;
  std::vector<NodeId> node_of;
  auto idx = [&](NodeId n) {
    auto [it, inserted] = index.emplace(n, static_cast<int>(node_of.size()));
    if (inserted) node_of.push_back(n);
    return it->second;
  };
  idx(source);
  for (const auto& [n, nb] : adjacency) {
    idx(n);
    for (NodeId m : nb) idx(m);
  }
  const int n = static_cast<int>(node_of.size());
  const int sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    NodeId v = node_of[i];
    if (v == source) continue;
    if (blocked.count(v)) continue;
    net.add_arc(2 * i, 2 * i + 1, 1);
    if (targets.count(v)) net.add_arc(2 * i + 1, sink, 1);
  }
  for (const auto& [u, nb] : adjacency) {
    if (u != source && (targets.count(u) || blocked.count(u))) continue;
    for (NodeId v : nb) {
      if (v == source || blocked.count(v)) continue;
      net.add_arc(2 * index[u] + 1, 2 * index[v], 1);
    }
  }
  int flow = 0;
  while (flow < count && net.augment(2 * index[source] + 1, sink)) ++flow;

  std::vector<std::vector<NodeId>> paths;
  for (int k = 0; k < flow; ++k) {
    std::vector<NodeId> path{source};
    int at = 2 * index[source] + 1;
    while (at != sink) {
      auto arcs = net.used_successors(at);
      ensure(!arcs.empty(), "flow decomposition lost a unit");
      int arc = arcs.front();
      net.consume(arc);
      int next = net.head(arc);
      if (next == sink) break;
      // next is an in-node; step through its out-node.
      path.push_back(node_of[next / 2]);
      auto inner = net.used_successors(next);
      ensure(!inner.empty(), "flow decomposition lost a unit");
      net.consume(inner.front());
      at = net.head(inner.front());
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::array<std::vector<NodeId>, 3> disjoint_paths_to_boundary(const Disk& disk,
                                                              NodeId x) {
  if (!disk.has_node(x) || disk.is_boundary_node(x))
    throw Error(ErrorCode::kNotInternal,
                "node " + std::to_string(x) + " is not an interior node of the disk");
  std::map<NodeId, std::vector<NodeId>> adjacency;
  for (NodeId n : disk.nodes()) adjacency[n] = disk.neighbors(n);
  std::set<NodeId> rim(disk.boundary().begin(), disk.boundary().end());
  auto paths = vertex_disjoint_paths(adjacency, x, rim, {}, 3);
  ensure(paths.size() == 3, "fewer than 3 disjoint paths to the boundary");
  std::sort(paths.begin(), paths.end());
  return {paths[0], paths[1], paths[2]};
}

}  // namespace nuclei
