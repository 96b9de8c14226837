#ifndef NUCLEI_REDUCER_HPP_
#define NUCLEI_REDUCER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nuclei/moves.hpp"

namespace nuclei {

enum class NodeClass { kC0, kC1, kC2 };

std::string to_string(NodeClass c);

/// Class of a depth-1 internal node with its witness: the removable
/// tetrahedron for C0, the face (x, n, y) with (n, y) external for C1.
struct Classification {
  NodeClass kind = NodeClass::kC2;
  std::optional<Tet> removable;
  std::optional<Face> witness;
};

std::map<NodeId, Classification> classify_depth1(const Triangulation& t);
Classification classify_node(const Triangulation& t, NodeId x);

/// One split performed by a sweep.
struct SplitTrace {
  NodeId hemisphere = 0;  // n* whose hemisphere was being processed
  std::string piece;      // L/R word of the piece that was cut ("" = root)
  NodeId owner = 0;       // node that was split
  std::vector<NodeId> core;  // path inside the piece
  std::vector<NodeId> path;  // core plus cone extensions
  NodeId left = 0;
  NodeId right = 0;
  std::size_t degree = 0;        // |E(owner)| before the split
  std::size_t degree_left = 0;   // |E(left)| after
  std::size_t degree_right = 0;  // |E(right)| after

  bool degree_identity() const { return degree + 4 == degree_left + degree_right; }
};

struct SweepTrace {
  std::vector<SplitTrace> splits;
  std::vector<MoveRecord> moves;
  /// No interior edge of a processed hemisphere lies on two core paths.
  bool edge_disjoint = true;
  /// For every processed hemisphere, the nodes that now stand in for its
  /// node n* (n* itself when it was not split). Feeds the next sweep.
  std::vector<NodeId> frontier;
};

struct SweepResult {
  Triangulation result;
  SweepTrace trace;
};

/// Promotes the C2 nodes in the hemispheres of `nodes` (processed in the
/// given order) to C1 by cutting each hemisphere into a binary tree of
/// pieces. Pieces whose interior holds no C2 node are left uncut.
SweepResult sweep_c2_to_c1(const Triangulation& t, const std::vector<NodeId>& nodes);

/// Promotes the C1 nodes adjacent to the boundary of each hemisphere of
/// `nodes` to C0 by splitting along paths through their witness edges.
SweepResult sweep_c1_to_c0(const Triangulation& t, const std::vector<NodeId>& nodes);

/// Counters of one depth level. Depths refer to the input triangulation;
/// nodes created by splits inherit the depth of the node they replace.
struct LevelCounters {
  int depth = 0;
  long a = 0;  // internal edges joining depth d and d+1
  long b = 0;  // internal edges inside depth d
  long c = 0;  // internal faces meeting depth d and d+1
  long a_hat_prev = 0;  // edges between d-1 and d when level d starts
  long delta_c2 = 0;    // internal edges added by the C2->C1 sweep
  long delta_c1 = 0;    // internal edges added by the C1->C0 sweep
  long removed = 0;     // change of internal edges from removals (<= 0)
  int splits_c2 = 0;
  int splits_c1 = 0;
  int removals = 0;
};

struct ReducerOptions {
  long growth_constant = 2016;
  /// Bound on t'/t and f'/t after elimination. 0 selects 4 * growth_constant.
  long size_constant = 0;
};

struct GrowthLedger {
  std::vector<LevelCounters> levels;
  FVector before;
  FVector after;
  long e_before = 0;
  long e_after = 0;
  long delta = 0;  // sum of the sweep increments
  double ratio = 0;  // delta / (t + n_i) of the input
  long growth_constant = 0;
  long size_constant = 0;
  int max_extension = 0;  // max |path| - |core| over all splits (edges)
  bool sums_hold = true;
  bool a_hat_bound_holds = true;
  bool edge_disjoint = true;
  bool degree_identity = true;
  bool growth_bound_holds = true;
  bool size_bound_holds = true;

  bool ok() const {
    return sums_hold && edge_disjoint && degree_identity && growth_bound_holds &&
           size_bound_holds;
  }
};

struct EliminationResult {
  Triangulation result;
  GrowthLedger ledger;
  std::vector<MoveRecord> log;
  std::vector<SplitTrace> splits;
};

/// Removes every internal node level by level: C2->C1 sweep, C1->C0 sweep,
/// then one removal per C0 node. Stops as soon as no internal node is left.
/// Throws kInvariant if a round makes no progress or a ledger identity fails.
EliminationResult eliminate_internal_nodes(const Triangulation& t,
                                           const ReducerOptions& options = {});

}  // namespace nuclei

#endif  // NUCLEI_REDUCER_HPP_
