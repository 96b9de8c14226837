#ifndef NUCLEI_TRIANGULATION_HPP_
#define NUCLEI_TRIANGULATION_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nuclei/simplex.hpp"

namespace nuclei {

/// A triangulated 3-ball given by its list of tetrahedra.
///
/// Values are immutable: the incidence maps are built once at construction
/// and shared between copies. Moves return fresh triangulations.
///
/// A face lying in exactly one tetrahedron is external; an edge or node is
/// external when it lies in an external face.
class Triangulation {
 public:
  Triangulation();

  // Throws Error(kRepeatedNode / kDuplicateTetrahedron / kOutOfRange /
  // kBadRoot). Tetrahedra are sorted and stored in ascending order.
  explicit Triangulation(std::vector<Tet> tets,
                         std::optional<Face> root = std::nullopt);

  const std::vector<Tet>& tets() const { return data_->tets; }
  std::size_t size() const { return data_->tets.size(); }

  /// Root face in label order (node labeled 0, 1, 2), if any.
  const std::optional<Face>& root() const { return data_->root; }
  Triangulation with_root(std::optional<Face> root) const;

  const std::vector<NodeId>& nodes() const { return data_->nodes; }
  const std::map<Face, std::vector<std::size_t>>& face_tets() const {
    return data_->face_tets;
  }
  const std::map<Edge, std::vector<std::size_t>>& edge_tets() const {
    return data_->edge_tets;
  }
  const std::map<NodeId, std::vector<std::size_t>>& node_tets() const {
    return data_->node_tets;
  }

  bool has_node(NodeId n) const;
  bool has_edge(const Edge& e) const;
  bool has_face(const Face& f) const;
  bool has_tet(const Tet& t) const;

  bool is_external(const Face& f) const;
  bool is_external(const Edge& e) const;
  bool is_external_node(NodeId n) const;

  const std::vector<Face>& external_faces() const {
    return data_->external_faces;
  }
  const std::set<Edge>& external_edges() const { return data_->external_edges; }
  const std::set<NodeId>& external_nodes() const {
    return data_->external_nodes;
  }
  std::vector<NodeId> internal_nodes() const;
  std::vector<Edge> internal_edges() const;
  std::vector<Face> internal_faces() const;

  /// Neighbors of n along edges, ascending.
  std::vector<NodeId> neighbors(NodeId n) const;

  /// Smallest positive id not used by any node.
  NodeId fresh_node() const;
  NodeId max_node() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.tets() == b.tets() && a.root() == b.root();
  }

 private:
  struct Data {
    std::vector<Tet> tets;
    std::optional<Face> root;
    std::vector<NodeId> nodes;
    std::map<Face, std::vector<std::size_t>> face_tets;
    std::map<Edge, std::vector<std::size_t>> edge_tets;
    std::map<NodeId, std::vector<std::size_t>> node_tets;
    std::vector<Face> external_faces;
    std::set<Edge> external_edges;
    std::set<NodeId> external_nodes;
  };
  std::shared_ptr<const Data> data_;
};

/// Parses the `.tet` text format: `#` comments, blank lines, an optional
/// `root: a b c` directive and one tetrahedron (4 positive ids) per line.
/// Errors carry the 1-based line number.
Triangulation parse_triangulation(std::string_view text);

/// Writes the `.tet` format. Output is deterministic (sorted tetrahedra).
std::string format_triangulation(const Triangulation& t,
                                 std::string_view comment = {});

Triangulation read_triangulation_file(const std::string& path);

/// FNV-1a digest of the formatted triangulation, as 16 hex digits.
std::string digest(const Triangulation& t);
std::string digest(const std::vector<Triangulation>& forest);

}  // namespace nuclei

#endif  // NUCLEI_TRIANGULATION_HPP_
