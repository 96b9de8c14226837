#include "nuclei/complex.hpp"

#include <deque>
#include <set>

#include "nuclei/error.hpp"

namespace nuclei {

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Number of connected components of a set of triangles under edge adjacency.
int triangle_components(const std::vector<Face>& tris) {
  if (tris.empty()) return 0;
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (const Edge& e : edges_of(tris[i])) by_edge[e].push_back(i);
  std::vector<bool> seen(tris.size(), false);
  int comps = 0;
  for (std::size_t s = 0; s < tris.size(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const Edge& e : edges_of(tris[u]))
        for (auto v : by_edge[e])
          if (!seen[v]) {
            seen[v] = true;
            queue.push_back(v);
          }
    }
  }
  return comps;
}

long euler_characteristic(const std::vector<Face>& tris) {
  std::set<Edge> edges;
  std::set<NodeId> nodes;
  for (const Face& f : tris) {
    for (const Edge& e : edges_of(f)) edges.insert(e);
    for (NodeId n : f) nodes.insert(n);
  }
  return static_cast<long>(nodes.size()) - static_cast<long>(edges.size()) +
         static_cast<long>(tris.size());
}

// Empty string when the triangles form a disk (want_sphere=false) or a
// 2-sphere (want_sphere=true); otherwise a description of the defect.
std::string surface_defect(const std::vector<Face>& tris, bool want_sphere) {
  if (tris.empty()) return "empty";
  std::map<Edge, int> count;
  for (const Face& f : tris)
    for (const Edge& e : edges_of(f)) ++count[e];
  std::vector<Edge> rim;
  for (const auto& [e, c] : count) {
    if (c > 2) return "edge " + to_string(e) + " in " + std::to_string(c) + " triangles";
    if (c == 1) rim.push_back(e);
  }
  if (triangle_components(tris) != 1) return "not connected";
  long chi = euler_characteristic(tris);
  if (want_sphere) {
    if (!rim.empty()) return "has boundary";
    if (chi != 2) return "Euler characteristic " + std::to_string(chi);
  } else {
    if (rim.empty()) return "closed, expected a disk";
    if (cycle_from_edges(rim).empty()) return "boundary is not one cycle";
    if (chi != 1) return "Euler characteristic " + std::to_string(chi);
  }
  return {};
}

std::string graph_defect(const std::vector<Edge>& edges, bool want_cycle) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const Edge& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  int ends = 0;
  for (const auto& [n, nb] : adj) {
    if (nb.size() == 1) ++ends;
    else if (nb.size() != 2) return "node " + std::to_string(n) + " has degree " +
                                     std::to_string(nb.size());
  }
  if (want_cycle && ends != 0) return "not a cycle";
  if (!want_cycle && ends != 2) return "not a path";
  std::set<NodeId> seen{adj.begin()->first};
  std::deque<NodeId> queue{adj.begin()->first};
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u])
      if (seen.insert(v).second) queue.push_back(v);
  }
  if (seen.size() != adj.size()) return "not connected";
  return {};
}

}  // namespace

ValidationReport validate_ball(const Triangulation& t) {
  ValidationReport report;
  auto add = [&](std::string name, std::string defect) {
    report.checks.push_back({std::move(name), defect.empty(), std::move(defect)});
  };

  std::string defect;
  for (const auto& [f, owners] : t.face_tets())
    if (owners.size() > 2) {
      defect = "face " + to_string(f) + " lies in " + std::to_string(owners.size()) +
               " tetrahedra";
      break;
    }
  add("face-multiplicity", defect);

  add("boundary-sphere", t.size() == 0 ? std::string("no tetrahedra")
                                       : surface_defect(t.external_faces(), true));

  defect.clear();
  for (const auto& [n, owners] : t.node_tets()) {
    std::vector<Face> link;
    for (auto i : owners) link.push_back(opposite_face(t.tets()[i], n));
    bool external = t.is_external_node(n);
    std::string d = surface_defect(link, !external);
    if (!d.empty()) {
      defect = "link of node " + std::to_string(n) + ": " + d;
      break;
    }
  }
  add("vertex-links", defect);

  defect.clear();
  for (const auto& [e, owners] : t.edge_tets()) {
    std::vector<Edge> link;
    for (auto i : owners) link.push_back(opposite_edge(t.tets()[i], e));
    std::string d = graph_defect(link, !t.is_external(e));
    if (!d.empty()) {
      defect = "link of edge " + to_string(e) + ": " + d;
      break;
    }
  }
  add("edge-links", defect);

  defect.clear();
  if (t.size() > 0) {
    std::vector<bool> seen(t.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const Face& f : faces_of(t.tets()[u]))
        for (auto v : t.face_tets().at(f))
          if (!seen[v]) {
            seen[v] = true;
            ++reached;
            queue.push_back(v);
          }
    }
    if (reached != t.size())
      defect = std::to_string(t.size() - reached) + " tetrahedra unreachable";
  } else {
    defect = "no tetrahedra";
  }
  add("connected", defect);

  long chi = static_cast<long>(t.size()) - static_cast<long>(t.face_tets().size()) +
             static_cast<long>(t.edge_tets().size()) -
             static_cast<long>(t.nodes().size());
  add("euler", chi == -1 ? std::string() : "t-f+e-n = " + std::to_string(chi));
  return report;
}

std::string FDelta::str() const {
  auto s = [](long v) { return (v > 0 ? "+" : "") + std::to_string(v); };
  return "<" + s(t) + "," + s(f) + "," + s(n) + ">";
}

bool FVector::euler_holds() const {
  return t - f_tot + e_tot - n_tot == -1 && f_s - e_s + n_s == 2 &&
         3 * f_s == 2 * e_s && 4 * t == 2 * (f_tot - f_s) + f_s && f_s % 2 == 0 &&
         f_tot == f_s + f_i && e_tot == e_s + e_i && n_tot == n_s + n_i;
}

std::string FVector::str() const {
  return "<" + std::to_string(t) + "," + std::to_string(f_s) + "," +
         std::to_string(n_i) + ">";
}

FVector f_vector(const Triangulation& t) {
  FVector v;
  v.t = static_cast<long>(t.size());
  v.f_tot = static_cast<long>(t.face_tets().size());
  v.e_tot = static_cast<long>(t.edge_tets().size());
  v.n_tot = static_cast<long>(t.nodes().size());
  v.f_s = static_cast<long>(t.external_faces().size());
  v.e_s = static_cast<long>(t.external_edges().size());
  v.n_s = static_cast<long>(t.external_nodes().size());
  v.f_i = v.f_tot - v.f_s;
  v.e_i = v.e_tot - v.e_s;
  v.n_i = v.n_tot - v.n_s;
  if (!v.euler_holds())
    invariant_failure("Euler identities fail for f-vector " + v.str());
  return v;
}

NodeFlower flower(const Triangulation& t, NodeId node) {
  auto it = t.node_tets().find(node);
  if (it == t.node_tets().end())
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(node));
  NodeFlower out;
  out.node = node;
  std::vector<Face> tris;
  for (auto i : it->second) tris.push_back(opposite_face(t.tets()[i], node));
  out.hemisphere = Disk(std::move(tris));
  if (t.is_external_node(node)) {
    std::vector<Edge> rim;
    for (const Face& f : t.external_faces())
      if (contains(f, node)) {
        auto rest = difference(f, std::array<NodeId, 1>{node});
        rim.push_back(Edge{rest[0], rest[1]});
      }
    out.external = cycle_from_edges(rim);
    ensure(out.external == out.hemisphere.boundary(),
           "hemisphere boundary differs from external flower at node " +
               std::to_string(node));
  }
  return out;
}

EdgeFlower flower(const Triangulation& t, const Edge& edge) {
  Edge e = sorted(edge);
  auto it = t.edge_tets().find(e);
  if (it == t.edge_tets().end())
    throw Error(ErrorCode::kUnknownEdge, "edge " + to_string(e));
  EdgeFlower out;
  out.edge = e;
  std::vector<Edge> link;
  for (auto i : it->second) link.push_back(opposite_edge(t.tets()[i], e));
  if (!t.is_external(e)) {
    out.hemisphere = cycle_from_edges(link);
    return out;
  }
  for (const Face& f : t.external_faces())
    if (contains(f, e[0]) && contains(f, e[1]))
      out.external.push_back(difference(f, e).front());
  std::sort(out.external.begin(), out.external.end());
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const Edge& l : link) {
    adj[l[0]].push_back(l[1]);
    adj[l[1]].push_back(l[0]);
  }
  if (out.external.size() != 2) return out;
  NodeId prev = 0;
  NodeId cur = out.external[0];
  out.hemisphere.push_back(cur);
  while (cur != out.external[1] && out.hemisphere.size() <= link.size()) {
    const auto& nb = adj[cur];
    NodeId next = nb[0] != prev ? nb[0] : (nb.size() > 1 ? nb[1] : 0);
    if (next == 0) break;
    prev = cur;
    cur = next;
    out.hemisphere.push_back(cur);
  }
  return out;
}

std::size_t external_degree(const Triangulation& t, NodeId node) {
  std::size_t k = 0;
  for (const Face& f : t.external_faces())
    if (contains(f, node)) ++k;
  return k;
}

int DepthMap::max_depth() const {
  int m = 0;
  for (const auto& [_, d] : depth) m = std::max(m, d);
  return m;
}

std::vector<NodeId> DepthMap::at(int d) const {
  std::vector<NodeId> out;
  for (const auto& [n, dn] : depth)
    if (dn == d) out.push_back(n);
  return out;
}

DepthMap depth_map(const Triangulation& t) {
  DepthMap dm;
  std::deque<NodeId> queue;
  for (NodeId n : t.external_nodes()) {
    dm.depth[n] = 0;
    queue.push_back(n);
  }
  std::map<NodeId, std::set<NodeId>> adj;
  for (const auto& [e, _] : t.edge_tets()) {
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u])
      if (!dm.depth.count(v)) {
        dm.depth[v] = dm.depth[u] + 1;
        queue.push_back(v);
      }
  }
  return dm;
}

}  // namespace nuclei
