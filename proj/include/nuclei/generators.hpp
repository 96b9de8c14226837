#ifndef NUCLEI_GENERATORS_HPP_
#define NUCLEI_GENERATORS_HPP_

#include <random>
#include <string_view>

#include "nuclei/disk.hpp"
#include "nuclei/triangulation.hpp"

namespace nuclei {

using Rng = std::mt19937_64;

/// The 12-node, 37-tetrahedron nucleus, as `.tet` text.
std::string_view table1_text();
Triangulation table1();

/// (1,2,3,4) rooted at (1,2,3).
Triangulation tetrahedron();

/// Inserts a new node at the center of `tet`, replacing it by 4 tetrahedra.
Triangulation stellar_subdivide(const Triangulation& t, const Tet& tet);

/// Tetrahedron with center 5: <4,4,1>.
Triangulation starred_tetrahedron();

/// Starred tetrahedron with (1,2,3,5) starred again at node 6: two internal
/// nodes, both at depth 1.
Triangulation doubly_starred_tetrahedron();

/// Tree of v tetrahedra, each new one glued to a uniformly chosen external
/// face other than the root (1,2,3).
Triangulation random_tree_of_tetrahedra(int v, Rng& rng);

struct RandomBallOptions {
  int tree_size = 6;
  int identifications = 2;
  int internal_nodes = 3;
};

/// Random ball: a tree of tetrahedra, then up to `identifications` successful
/// identify_faces moves, then `internal_nodes` internal nodes created by
/// add_tetra when a node of external degree 3 exists and by stellar
/// subdivision of a random tetrahedron otherwise.
Triangulation random_ball(const RandomBallOptions& options, Rng& rng);

/// Random triangulated disk grown by ears, corner fills and face stellar
/// subdivisions.
Disk random_disk(int steps, Rng& rng);

}  // namespace nuclei

#endif  // NUCLEI_GENERATORS_HPP_
