#ifndef NUCLEI_MOVES_HPP_
#define NUCLEI_MOVES_HPP_

#include <string>
#include <vector>

#include "nuclei/complex.hpp"
#include "nuclei/triangulation.hpp"

namespace nuclei {

enum class MoveKind {
  kCut3Face,
  kOpen2Face,
  kRemove1Tetra,
  kSplitNode,
  kIdentify,
  kAddTetra,
  kCollapse,
  kCone,
};

std::string to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& name);

/// One applied move. `args` depends on the kind:
///   Cut3Face     face (3 nodes)
///   Open2Face    n*, n1, n2
///   Remove1Tetra the tetrahedron (4 nodes)
///   SplitNode    n*, then the path
///   Identify     a, b, x, y
///   AddTetra     x
///   Collapse     a, b
///   Cone         the kept face (3 nodes)
/// `delta` is the change of <t, f_s, n_i> (summed over both parts for a cut).
/// `target` indexes the forest component the move acts on; a cut keeps its
/// first part there and appends the second.
struct MoveRecord {
  MoveKind kind{};
  int target = 0;
  std::vector<NodeId> args;
  FDelta delta;
  std::vector<NodeId> created;

  bool operator==(const MoveRecord&) const = default;
};

struct MoveResult {
  Triangulation result;
  MoveRecord record;
};

struct CutResult {
  Triangulation first;
  Triangulation second;
  MoveRecord record;
};

/// Separates the ball along an internal face whose three edges are external.
/// `first` holds the side containing the smallest tetrahedron.
CutResult cut_a_3_face(const Triangulation& t, const Face& face);

/// Opens the internal face (n*, n1, n2), where (n1, n2) is internal and
/// (n*, n1), (n*, n2) are external. n* is replaced by two nodes, each coning
/// one side of the chord (n1, n2) in I(n*). Delta <0,+2,0>.
MoveResult open_a_2_face(const Triangulation& t, NodeId n_star, NodeId n1,
                         NodeId n2);

/// Removes a tetrahedron with one internal node whose opposite face is
/// external. Delta <-1,+2,-1>.
MoveResult remove_1_tetra(const Triangulation& t, const Tet& tet);

/// Splits the external node n* along a splitting path of I(n*).
/// Created nodes are {L, R} (smallest unused ids, L first); L cones the side
/// of the path holding the smallest boundary node of I(n*) off the path.
/// Delta <|path|, +2, 0>.
MoveResult split_node(const Triangulation& t, NodeId n_star,
                      const std::vector<NodeId>& path);

/// Tetrahedra of `t` removable by remove_1_tetra, ascending.
std::vector<Tet> removable_tetrahedra(const Triangulation& t);
bool is_removable(const Triangulation& t, const Tet& tet);

/// Smallest `count` positive ids not in `used`.
std::vector<NodeId> allocate_nodes(const std::vector<NodeId>& used, int count);

/// Throws kInvariant unless the triangulation passes validate_ball.
void require_ball(const Triangulation& t, const std::string& context);

}  // namespace nuclei

#endif  // NUCLEI_MOVES_HPP_
