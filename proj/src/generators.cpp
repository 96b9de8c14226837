#include "nuclei/generators.hpp"

#include <algorithm>
#include <set>

#include "nuclei/error.hpp"
#include "nuclei/inverse.hpp"

namespace nuclei {

std::string_view table1_text() {
  return R"(
# Nucleus with 12 nodes and 37 tetrahedra (17 without an external face).
1 3 4 10
1 3 5 10
1 3 5 11
1 4 6 10
1 5 7 8
1 5 7 10
1 5 8 11
1 6 7 8
1 6 7 10
2 3 5 9
2 3 5 11
2 3 8 9
2 3 8 11
2 5 6 11
2 6 11 12
2 7 10 11
2 7 11 12
2 8 9 10
2 8 10 11
3 4 9 10
3 4 9 12
3 5 9 10
3 8 9 12
4 5 6 11
4 5 7 8
4 5 8 11
4 6 10 11
4 7 8 9
4 7 9 12
4 8 9 10
4 8 10 11
6 7 8 9
6 7 9 11
6 7 10 11
6 8 9 12
6 9 11 12
7 9 11 12
)";
}

Triangulation table1() { return parse_triangulation(table1_text()); }

Triangulation tetrahedron() { return Triangulation({{1, 2, 3, 4}}, Face{1, 2, 3}); }

Triangulation stellar_subdivide(const Triangulation& t, const Tet& tet) {
  Tet key = sorted(tet);
  if (!t.has_tet(key)) throw Error(ErrorCode::kUnknownFace, "tetrahedron " + to_string(key));
  NodeId center = t.max_node() + 1;
  std::vector<Tet> tets;
  for (const Tet& other : t.tets())
    if (other != key) tets.push_back(other);
  for (const Face& f : faces_of(key)) tets.push_back(make_tet(center, f[0], f[1], f[2]));
  return Triangulation(std::move(tets), t.root());
}

Triangulation starred_tetrahedron() {
  return stellar_subdivide(tetrahedron(), {1, 2, 3, 4});
}

Triangulation doubly_starred_tetrahedron() {
  return stellar_subdivide(starred_tetrahedron(), {1, 2, 3, 5});
}

Triangulation random_tree_of_tetrahedra(int v, Rng& rng) {
  if (v < 1) throw Error(ErrorCode::kOutOfRange, "tree size must be positive");
  std::vector<Tet> tets{{1, 2, 3, 4}};
  std::set<Face> open;
  for (const Face& f : faces_of(tets[0]))
    if (f != Face{1, 2, 3}) open.insert(f);
  NodeId next = 5;
  for (int i = 1; i < v; ++i) {
    auto it = open.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng));
    Face f = *it;
    open.erase(it);
    Tet tet = make_tet(f[0], f[1], f[2], next++);
    tets.push_back(tet);
    for (const Face& g : faces_of(tet))
      if (g != f) open.insert(g);
  }
  return Triangulation(std::move(tets), Face{1, 2, 3});
}

namespace {

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

}  // namespace

Triangulation random_ball(const RandomBallOptions& options, Rng& rng) {
  Triangulation t = random_tree_of_tetrahedra(options.tree_size, rng);
  int done = 0;
  for (int attempt = 0; done < options.identifications && attempt < 20 * options.identifications;
       ++attempt) {
    std::vector<Edge> edges(t.external_edges().begin(), t.external_edges().end());
    Edge e = pick(edges, rng);
    auto fl = flower(t, e);
    try {
      t = identify_faces(t, e[0], e[1], fl.external[0], fl.external[1]).result;
      ++done;
    } catch (const Error&) {
    }
  }
  for (int k = 0; k < options.internal_nodes; ++k) {
    std::vector<NodeId> degree3;
    for (NodeId n : t.external_nodes())
      if (external_degree(t, n) == 3) degree3.push_back(n);
    bool added = false;
    if (!degree3.empty() && std::bernoulli_distribution(0.5)(rng)) {
      try {
        t = add_tetra(t, pick(degree3, rng)).result;
        added = true;
      } catch (const Error&) {
      }
    }
    if (!added) t = stellar_subdivide(t, pick(t.tets(), rng));
  }
  return t;
}

Disk random_disk(int steps, Rng& rng) {
  std::vector<Face> tris{{1, 2, 3}};
  NodeId next = 4;
  for (int s = 0; s < steps; ++s) {
    Disk d(tris);
    const auto& b = d.boundary();
    std::size_t p = b.size();
    int choice = std::uniform_int_distribution<int>(0, 2)(rng);
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, p - 1)(rng);
    NodeId u = b[i];
    NodeId v = b[(i + 1) % p];
    NodeId w = b[(i + 2) % p];
    if (choice == 1 && p > 3 && !d.has_edge(make_edge(u, w))) {
      tris.push_back(make_face(u, v, w));
    } else if (choice == 2) {
      Face f = pick(tris, rng);
      tris.erase(std::find(tris.begin(), tris.end(), f));
      NodeId c = next++;
      tris.push_back(make_face(c, f[0], f[1]));
      tris.push_back(make_face(c, f[0], f[2]));
      tris.push_back(make_face(c, f[1], f[2]));
    } else {
      tris.push_back(make_face(u, v, next++));
    }
  }
  return Disk(tris);
}

}  // namespace nuclei
