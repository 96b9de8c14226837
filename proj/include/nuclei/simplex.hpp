#ifndef NUCLEI_SIMPLEX_HPP_
#define NUCLEI_SIMPLEX_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace nuclei {

using NodeId = int;

// Simplices are stored as sorted tuples of node ids.
using Edge = std::array<NodeId, 2>;
using Face = std::array<NodeId, 3>;
using Tet = std::array<NodeId, 4>;

template <std::size_t N>
std::array<NodeId, N> sorted(std::array<NodeId, N> s) {
  std::sort(s.begin(), s.end());
  return s;
}

inline Edge make_edge(NodeId a, NodeId b) { return sorted(Edge{a, b}); }
inline Face make_face(NodeId a, NodeId b, NodeId c) {
  return sorted(Face{a, b, c});
}
inline Tet make_tet(NodeId a, NodeId b, NodeId c, NodeId d) {
  return sorted(Tet{a, b, c, d});
}

template <std::size_t N>
bool contains(const std::array<NodeId, N>& s, NodeId n) {
  return std::find(s.begin(), s.end(), n) != s.end();
}

/// The four faces of a tetrahedron; face i omits vertex i.
inline std::array<Face, 4> faces_of(const Tet& t) {
  return {Face{t[1], t[2], t[3]}, Face{t[0], t[2], t[3]},
          Face{t[0], t[1], t[3]}, Face{t[0], t[1], t[2]}};
}

inline std::array<Edge, 6> edges_of(const Tet& t) {
  return {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[0], t[3]},
          Edge{t[1], t[2]}, Edge{t[1], t[3]}, Edge{t[2], t[3]}};
}

inline std::array<Edge, 3> edges_of(const Face& f) {
  return {Edge{f[0], f[1]}, Edge{f[0], f[2]}, Edge{f[1], f[2]}};
}

/// Nodes of `s` not in `remove`, in ascending order.
template <std::size_t N, std::size_t M>
std::vector<NodeId> difference(const std::array<NodeId, N>& s,
                               const std::array<NodeId, M>& remove) {
  std::vector<NodeId> out;
  for (NodeId n : s)
    if (!contains(remove, n)) out.push_back(n);
  return out;
}

inline NodeId opposite(const Tet& t, const Face& f) {
  for (NodeId n : t)
    if (!contains(f, n)) return n;
  return 0;
}

inline Face opposite_face(const Tet& t, NodeId n) {
  Face f{};
  std::size_t k = 0;
  for (NodeId m : t)
    if (m != n && k < 3) f[k++] = m;
  return f;
}

inline Edge opposite_edge(const Tet& t, const Edge& e) {
  Edge out{};
  std::size_t k = 0;
  for (NodeId m : t)
    if (!contains(e, m) && k < 2) out[k++] = m;
  return out;
}

template <std::size_t N>
std::string to_string(const std::array<NodeId, N>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::string to_string(const std::vector<NodeId>& path);

}  // namespace nuclei

#endif  // NUCLEI_SIMPLEX_HPP_
