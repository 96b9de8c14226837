#ifndef NUCLEI_DISK_HPP_
#define NUCLEI_DISK_HPP_

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nuclei/simplex.hpp"

namespace nuclei {

/// Boundary label of a disk node: either a negative integer (a node of the
/// original polygon) or a word over {L, R} naming the child node that the
/// labeled node is attached to.
class Label {
 public:
  Label() = default;
  static Label negative(int k);
  static Label sequence(std::string word);

  bool is_negative() const { return negative_ != 0; }
  int value() const { return negative_; }
  const std::string& word() const { return word_; }

  /// Word with its last letter exchanged (L <-> R).
  static std::string flip_last(std::string word);

  std::string str() const;

  auto operator<=>(const Label&) const = default;

 private:
  int negative_ = 0;
  std::string word_;
};

using SplittingPath = std::vector<NodeId>;

/// A 2d triangulated disk (or sphere, when the boundary is empty) with an
/// optional labeling of its boundary nodes.
///
/// The boundary cycle is normalized to start at its smallest node and to
/// continue towards the smaller of that node's two boundary neighbors.
class Disk {
 public:
  Disk() = default;
  /// Throws kInvariant if the triangles do not form a disk or a sphere.
  explicit Disk(std::vector<Face> triangles,
                std::map<NodeId, Label> labels = {});

  const std::vector<Face>& triangles() const { return triangles_; }
  const std::vector<NodeId>& boundary() const { return boundary_; }
  const std::map<NodeId, Label>& labels() const { return labels_; }
  const std::set<NodeId>& nodes() const { return nodes_; }

  Disk with_labels(std::map<NodeId, Label> labels) const;

  bool is_sphere() const { return boundary_.empty(); }
  bool is_boundary_node(NodeId n) const;
  bool is_boundary_edge(const Edge& e) const;
  bool has_edge(const Edge& e) const;
  bool has_node(NodeId n) const { return nodes_.count(n) > 0; }

  std::vector<NodeId> interior_nodes() const;
  std::vector<Edge> edges() const;
  std::vector<Edge> interior_edges() const;
  const std::vector<NodeId>& neighbors(NodeId n) const;

 private:
  std::vector<Face> triangles_;
  std::vector<NodeId> boundary_;
  std::map<NodeId, Label> labels_;
  std::set<NodeId> nodes_;
  std::map<Edge, int> edge_count_;
  std::map<NodeId, std::vector<NodeId>> adjacency_;
};

/// Orders a cycle given as an undirected edge set. Returns an empty vector
/// when the edges are not a single simple cycle.
std::vector<NodeId> cycle_from_edges(const std::vector<Edge>& edges);
std::vector<NodeId> normalize_cycle(std::vector<NodeId> cycle);

enum class Condition { kK1, kK2, kK3, kUnlabeled };

struct AdmissibilityViolation {
  Condition condition;
  std::string detail;
};

std::vector<AdmissibilityViolation> check_admissible(const Disk& disk);

/// Throws kBadPath if `path` is not a splitting path of `disk`: a simple path
/// joining two distinct boundary nodes, avoiding boundary edges, whose inner
/// nodes are interior nodes.
void require_splitting_path(const Disk& disk, const SplittingPath& path);
bool is_splitting_path(const Disk& disk, const SplittingPath& path);

/// Either the smallest chord joining two boundary nodes or, if there is no
/// chord, the shortest interior path between differently labeled boundary
/// nodes (ties: lexicographically smallest node sequence).
SplittingPath find_splitting_path(const Disk& disk);

/// Shortest path from `from` to `to` whose inner nodes are interior nodes of
/// the disk and are not in `blocked`. Lexicographically smallest among the
/// shortest. Empty if none.
std::vector<NodeId> shortest_interior_path(const Disk& disk, NodeId from,
                                           NodeId to,
                                           const std::set<NodeId>& blocked = {});

struct DiskCut {
  Disk left;
  Disk right;
};

/// Cuts along a splitting path. The left piece is the one containing the
/// smallest boundary node not on the path. Inner path nodes are labeled
/// `left_label` in the left piece and `right_label` in the right piece.
DiskCut cut_disk(const Disk& disk, const SplittingPath& path,
                 const Label& left_label, const Label& right_label);
DiskCut cut_disk(const Disk& disk, const SplittingPath& path,
                 const Label& fresh_label);

/// Three paths from interior node x to distinct boundary nodes, pairwise
/// disjoint except at x, each touching the boundary only at its last node.
/// Computed by unit-capacity max-flow with split vertices.
std::array<std::vector<NodeId>, 3> disjoint_paths_to_boundary(const Disk& disk,
                                                              NodeId x);

/// Up to `count` vertex-disjoint paths from `source` to nodes of `targets`.
/// Paths stop at the first target; inner nodes avoid `blocked`.
std::vector<std::vector<NodeId>> vertex_disjoint_paths(
    const std::map<NodeId, std::vector<NodeId>>& adjacency, NodeId source,
    const std::set<NodeId>& targets, const std::set<NodeId>& blocked,
    int count);

}  // namespace nuclei

#endif  // NUCLEI_DISK_HPP_
