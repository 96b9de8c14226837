#ifndef NUCLEI_ENUMERATE_HPP_
#define NUCLEI_ENUMERATE_HPP_

#include <map>
#include <vector>

#include "nuclei/trees.hpp"

namespace nuclei {

struct EnumerationOptions {
  int max_tets = 4;
  /// Allow add_tetra, which creates internal nodes on the way to nuclei
  /// that are only reachable through collapses.
  bool internal_nodes = true;
  int jobs = 1;
};

struct Enumeration {
  int max_tets = 0;
  /// Unrooted balls found, by t.
  std::map<int, long> balls;
  /// Unrooted nuclei found, by (t, f).
  std::map<std::pair<int, int>, long> nuclei;
  /// Every rooted nucleus found, in rooted canonical form. Its counts are
  /// the observed rho(t, f).
  NucleusCatalog catalog;
  /// Smallest K1 >= 2 consistent with the observed counts.
  long k1_estimate = 2;
};

/// Closes the tetrahedron under gluing a tetrahedron onto an external face,
/// identify, add_tetra and collapse, keeping balls with at most max_tets
/// tetrahedra and removing isomorphic duplicates. The search may miss balls
/// that are reachable only through larger intermediates, so the counts are
/// lower bounds. Throws kOutOfRange unless 1 <= max_tets <= 6.
Enumeration enumerate_balls(const EnumerationOptions& options);

}  // namespace nuclei

#endif  // NUCLEI_ENUMERATE_HPP_
