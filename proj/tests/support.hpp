// Helpers shared by the unit tests and the acceptance runner: instance
// generators and the searches that pick legal move arguments.
#ifndef NUCLEI_TESTS_SUPPORT_HPP_
#define NUCLEI_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "nuclei/canonical.hpp"
#include "nuclei/error.hpp"
#include "nuclei/generators.hpp"
#include "nuclei/inverse.hpp"
#include "nuclei/nuclei.hpp"

namespace nuclei::testing {

/// The code of the Error thrown by `f`, or nullopt if it returns.
template <class F>
std::optional<ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline int external_edges(const Triangulation& t, const Face& f) {
  int n = 0;
  for (const Edge& e : edges_of(f)) n += t.is_external(e);
  return n;
}

inline std::vector<Face> internal_faces_with(const Triangulation& t, int external) {
  std::vector<Face> out;
  for (const Face& f : t.internal_faces())
    if (external_edges(t, f) == external) out.push_back(f);
  return out;
}

/// (n*, n1, n2) arguments of open-a-2-face for a face with two external edges.
inline std::array<NodeId, 3> open_arguments(const Triangulation& t, const Face& f) {
  for (int i = 0; i < 3; ++i) {
    NodeId a = f[(i + 1) % 3], b = f[(i + 2) % 3];
    if (!t.is_external(make_edge(a, b))) return {f[i], a, b};
  }
  return {0, 0, 0};
}

/// A splitting path of I(n) between two random boundary nodes, if one of
/// the attempts finds one.
template <class R>
std::optional<std::vector<NodeId>> random_split_path(const Triangulation& t, NodeId n, R& rng,
                                                     int attempts = 8) {
  const Disk disk = flower(t, n).hemisphere;
  const auto& boundary = disk.boundary();
  if (boundary.size() < 4) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, boundary.size() - 1);
  for (int i = 0; i < attempts; ++i) {
    NodeId a = boundary[pick(rng)], b = boundary[pick(rng)];
    if (a == b) continue;
    auto path = shortest_interior_path(disk, a, b);
    if (!path.empty() && is_splitting_path(disk, path)) return path;
  }
  return std::nullopt;
}

/// Random balls of a few shapes: plain trees, trees with identifications,
/// balls with internal nodes and coned balls.
template <class R>
Triangulation random_instance(R& rng, int index) {
  switch (index % 4) {
    case 0:
      return random_tree_of_tetrahedra(3 + index % 7, rng);
    case 1:
      return random_ball({5 + index % 5, 1 + index % 4, 0}, rng);
    case 2:
      return random_ball({4 + index % 4, index % 3, 1 + index % 4}, rng);
    default: {
      Triangulation b = random_ball({4 + index % 3, 1 + index % 2, index % 2}, rng);
      return cone_ball(b, b.external_faces()[index % b.external_faces().size()]).result;
    }
  }
}

inline bool same_up_to_labels(const Triangulation& a, const Triangulation& b) {
  return canonical_form(a.with_root(std::nullopt)) == canonical_form(b.with_root(std::nullopt));
}

}  // namespace nuclei::testing

#endif  // NUCLEI_TESTS_SUPPORT_HPP_
