#ifndef NUCLEI_INVERSE_HPP_
#define NUCLEI_INVERSE_HPP_

#include "nuclei/moves.hpp"

namespace nuclei {

/// Glues the external faces (x, a, b) and (y, a, b) by merging x and y into
/// the smaller of the two ids. Undoes open_a_2_face. Delta <0,-2,0>.
///
/// Throws kNotExternal (edge or faces), kAdjacent (x, y joined by an edge)
/// or kCommonNeighbor (x and y share a neighbor besides a and b).
MoveResult identify_faces(const Triangulation& t, NodeId a, NodeId b,
                          NodeId x, NodeId y);

/// Fills the triangular external flower of x with one tetrahedron, so x
/// becomes internal. Undoes remove_1_tetra. Delta <+1,-2,+1>.
///
/// Throws kBadDegree unless x is external with external degree 3, and
/// kFaceMultiplicity if the closing face already exists.
MoveResult add_tetra(const Triangulation& t, NodeId x);

/// Contracts the external edge (a, b): the tetrahedra around it are removed
/// and b is merged into a (the surviving id is the smaller one). Undoes
/// split_node. Requires I(a) and I(b) to meet exactly in I(e): common
/// vertices equal the nodes of I(e) (kCollapseVertexSets), common edges equal
/// the edges of I(e) (kCollapseEdgeSets) and no common triangle
/// (kCollapseFaceSets).
MoveResult collapse_edge(const Triangulation& t, NodeId a, NodeId b);

/// Cones a new apex over every external face except `keep`. The result is a
/// ball whose boundary is `keep` plus the three apex faces over its edges.
MoveResult cone_ball(const Triangulation& t, const Face& keep);

}  // namespace nuclei

#endif  // NUCLEI_INVERSE_HPP_
