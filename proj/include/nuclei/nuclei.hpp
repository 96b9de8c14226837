#ifndef NUCLEI_NUCLEI_HPP_
#define NUCLEI_NUCLEI_HPP_

#include <vector>

#include "nuclei/reducer.hpp"

namespace nuclei {

/// No internal node, and every internal face has at most one external edge.
bool is_nucleus(const Triangulation& t);

/// No internal node, and every internal face has 0, 2 or 3 internal edges.
bool is_tree_of_nuclei(const Triangulation& t);

/// Child `child` is glued to `parent` along `face` (sorted node ids).
struct GlueEdge {
  int parent = 0;
  int child = 0;
  Face face{};
};

struct NucleusSplit {
  std::vector<Triangulation> nuclei;  // forest order of the move log
  std::vector<GlueEdge> edges;        // parents before children
  int root = 0;
  std::vector<MoveRecord> log;
};

/// Opens every internal face with exactly two external edges (repeating
/// until none is left), then cuts along internal faces with three external
/// edges. Each nucleus is rooted: the root nucleus at the input's root (or
/// its smallest external face), every other one at its glued face.
/// Throws kHasInternalNodes when n_i > 0.
NucleusSplit split_into_nuclei(const Triangulation& t);

struct Decomposition {
  EliminationResult elimination;
  NucleusSplit split;
  std::vector<MoveRecord> log;
};

Decomposition decompose(const Triangulation& t, const ReducerOptions& options = {});

/// Applies one recorded move to its target component.
void apply_move(std::vector<Triangulation>& forest, const MoveRecord& record);

/// Replays a move log on a single triangulation. Roots are dropped so the
/// result compares with the logged outputs by their tetrahedra.
std::vector<Triangulation> replay(const Triangulation& t, const std::vector<MoveRecord>& log);

}  // namespace nuclei

#endif  // NUCLEI_NUCLEI_HPP_
