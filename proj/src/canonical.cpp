#include "nuclei/canonical.hpp"

#include <algorithm>

#include "nuclei/disk.hpp"
#include "nuclei/error.hpp"

namespace nuclei {
namespace {

// Incidence data shared by every rooting of one triangulation.
struct Context {
  std::vector<NodeId> ids;
  std::map<NodeId, int> index;
  std::vector<std::vector<int>> flowers;  // external cycle per node, dense ids
  std::vector<std::array<int, 3>> faces;
  std::vector<std::vector<int>> apexes;  // opposite nodes of each face
  int external_count = 0;

  explicit Context(const Triangulation& t) {
    ids = t.nodes();
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    flowers.resize(ids.size());
    std::map<NodeId, std::vector<Edge>> rims;
    for (const Face& f : t.external_faces())
      for (NodeId n : f) {
        auto rest = difference(f, std::array<NodeId, 1>{n});
        rims[n].push_back(make_edge(rest[0], rest[1]));
      }
    for (const auto& [n, rim] : rims) {
      for (NodeId m : cycle_from_edges(rim)) flowers[index[n]].push_back(index[m]);
      ++external_count;
    }
    for (const auto& [f, owners] : t.face_tets()) {
      faces.push_back({index[f[0]], index[f[1]], index[f[2]]});
      std::vector<int> opp;
      for (auto o : owners) opp.push_back(index[opposite(t.tets()[o], f)]);
      apexes.push_back(std::move(opp));
    }
  }
};

std::vector<int> label_from(const Context& c, const std::array<int, 3>& root) {
  const int n = static_cast<int>(c.ids.size());
  std::vector<int> label(n, -1);
  std::vector<int> by_label;
  for (int i = 0; i < 3; ++i) {
    label[root[i]] = i;
    by_label.push_back(root[i]);
  }
  for (std::size_t k = 0; k < by_label.size(); ++k) {
    const auto& cycle = c.flowers[by_label[k]];
    const int len = static_cast<int>(cycle.size());
    int best = -1;
    bool forward = true;
    std::pair<int, int> best_key{n, n};
    for (int i = 0; i < len; ++i) {
      int u = cycle[i];
      int v = cycle[(i + 1) % len];
      if (label[u] < 0 || label[v] < 0) continue;
      std::pair<int, int> key{std::min(label[u], label[v]), std::max(label[u], label[v])};
      if (key < best_key) {
        best_key = key;
        best = i;
        forward = label[u] < label[v];
      }
    }
    ensure(best >= 0, "external flower without a labeled edge");
    // Walk from a through b and onwards around the cycle.
    for (int step = 0; step < len; ++step) {
      int pos = forward ? (best + step) % len : ((best + 1 - step) % len + len) % len;
      int node = cycle[pos];
      if (label[node] < 0) {
        label[node] = static_cast<int>(by_label.size());
        by_label.push_back(node);
      }
    }
  }
  ensure(static_cast<int>(by_label.size()) == c.external_count,
         "boundary is not connected");

  while (static_cast<int>(by_label.size()) < n) {
    std::array<int, 3> best_key{n, n, n};
    int target = -1;
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
      const auto& face = c.faces[f];
      if (label[face[0]] < 0 || label[face[1]] < 0 || label[face[2]] < 0) continue;
      int unlabeled = -1;
      int count = 0;
      for (int apex : c.apexes[f])
        if (label[apex] < 0) {
          unlabeled = apex;
          ++count;
        }
      if (count != 1) continue;
      std::array<int, 3> key{label[face[0]], label[face[1]], label[face[2]]};
      std::sort(key.begin(), key.end());
      if (key < best_key) {
        best_key = key;
        target = unlabeled;
      }
    }
    ensure(target >= 0, "internal nodes unreachable from labeled faces");
    label[target] = static_cast<int>(by_label.size());
    by_label.push_back(target);
  }
  return label;
}

std::array<int, 3> dense_root(const Context& c, const Triangulation& t) {
  if (!t.root()) throw Error(ErrorCode::kBadRoot, "triangulation has no root face");
  const Face& r = *t.root();
  if (!t.is_external(sorted(r)))
    throw Error(ErrorCode::kBadRoot, "root " + to_string(r) + " is not external");
  return {c.index.at(r[0]), c.index.at(r[1]), c.index.at(r[2])};
}

std::vector<Tet> relabeled_tets(const Triangulation& t, const Context& c,
                                const std::vector<int>& label) {
  std::vector<Tet> out;
  out.reserve(t.size());
  for (const Tet& tet : t.tets()) {
    Tet r{};
    for (int i = 0; i < 4; ++i) r[i] = label[c.index.at(tet[i])] + 1;
    out.push_back(sorted(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::map<NodeId, int> canonical_labels(const Triangulation& t) {
  Context c(t);
  auto label = label_from(c, dense_root(c, t));
  std::map<NodeId, int> out;
  for (std::size_t i = 0; i < c.ids.size(); ++i) out[c.ids[i]] = label[i];
  return out;
}

Triangulation relabel(const Triangulation& t, const std::map<NodeId, NodeId>& ids) {
  std::vector<Tet> tets;
  for (const Tet& tet : t.tets())
    tets.push_back({ids.at(tet[0]), ids.at(tet[1]), ids.at(tet[2]), ids.at(tet[3])});
  std::optional<Face> root;
  if (t.root()) root = Face{ids.at((*t.root())[0]), ids.at((*t.root())[1]), ids.at((*t.root())[2])};
  return Triangulation(std::move(tets), root);
}

Triangulation canonical_label(const Triangulation& t) {
  Context c(t);
  auto label = label_from(c, dense_root(c, t));
  return Triangulation(relabeled_tets(t, c, label), Face{1, 2, 3});
}

Triangulation canonical_form(const Triangulation& t) {
  if (t.size() == 0) return t;
  Context c(t);
  std::vector<Tet> best;
  for (const Face& f : t.external_faces()) {
    std::array<int, 3> r{c.index.at(f[0]), c.index.at(f[1]), c.index.at(f[2])};
    std::sort(r.begin(), r.end());
    do {
      auto tets = relabeled_tets(t, c, label_from(c, r));
      if (best.empty() || tets < best) best = std::move(tets);
    } while (std::next_permutation(r.begin(), r.end()));
  }
  return Triangulation(std::move(best), Face{1, 2, 3});
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size() || a.nodes().size() != b.nodes().size() ||
      a.external_faces().size() != b.external_faces().size())
    return false;
  return canonical_form(a).tets() == canonical_form(b).tets();
}

bool rooted_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size()) return false;
  return canonical_label(a).tets() == canonical_label(b).tets();
}

}  // namespace nuclei
