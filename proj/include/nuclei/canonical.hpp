#ifndef NUCLEI_CANONICAL_HPP_
#define NUCLEI_CANONICAL_HPP_

#include <map>
#include <vector>

#include "nuclei/triangulation.hpp"

namespace nuclei {

/// Canonical labels 0, 1, 2, ... of every node of a rooted triangulation.
///
/// The root face gets 0, 1, 2 in its stored order. External nodes are then
/// labeled flower by flower: labeled nodes are visited in ascending label
/// order, and in the external flower of each one the smallest edge (a, b)
/// with both ends labeled fixes a direction a -> b along which the unlabeled
/// flower nodes receive the next free labels. Internal nodes follow: the
/// smallest fully labeled face with exactly one unlabeled opposite node
/// hands the next label to that node.
///
/// Throws kBadRoot when `t` has no root or the root face is internal.
std::map<NodeId, int> canonical_labels(const Triangulation& t);

/// Renames nodes through `ids`; the root, if any, is renamed too.
Triangulation relabel(const Triangulation& t, const std::map<NodeId, NodeId>& ids);

/// The rooted triangulation with every node renamed to its canonical label
/// plus one (ids must stay positive). The root becomes (1, 2, 3).
Triangulation canonical_label(const Triangulation& t);

/// Smallest rooted canonical form over all 6 f_s choices of ordered root
/// face. Two triangulations are isomorphic iff these agree.
Triangulation canonical_form(const Triangulation& t);

bool isomorphic(const Triangulation& a, const Triangulation& b);

/// Rooted isomorphism: canonical labelings relative to both roots agree.
bool rooted_isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace nuclei

#endif  // NUCLEI_CANONICAL_HPP_
