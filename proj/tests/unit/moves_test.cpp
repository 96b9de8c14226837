#include "doctest.h"

#include "nuclei/moves.hpp"
#include "support.hpp"

using namespace nuclei;
using namespace nuclei::testing;

namespace {

// Two tetrahedra glued along (1,2,3): that face has three external edges.
Triangulation pair() { return Triangulation({{1, 2, 3, 4}, {1, 2, 3, 5}}); }

// Three tetrahedra around the internal edge (4,5): every face through (4,5)
// has two external edges.
Triangulation triple() { return Triangulation({{1, 2, 4, 5}, {2, 3, 4, 5}, {1, 3, 4, 5}}); }

TEST_CASE("cut separates two glued tetrahedra") {
  CutResult c = cut_a_3_face(pair(), Face{1, 2, 3});
  CHECK(c.first.tets() == std::vector<Tet>{{1, 2, 3, 4}});
  CHECK(c.second.tets() == std::vector<Tet>{{1, 2, 3, 5}});
  CHECK(c.record.delta == FDelta{0, 2, 0});
  CHECK(c.record.kind == MoveKind::kCut3Face);
}

TEST_CASE("cut preconditions") {
  CHECK(error_code([] { cut_a_3_face(pair(), Face{1, 2, 4}); }) == ErrorCode::kNotInternal);
  CHECK(error_code([] { cut_a_3_face(pair(), Face{1, 2, 6}); }) == ErrorCode::kUnknownFace);
  CHECK(error_code([] { cut_a_3_face(triple(), Face{1, 4, 5}); }) ==
        ErrorCode::kHasInternalEdge);
}

TEST_CASE("open a 2-face") {
  Triangulation t = triple();
  MoveResult m = open_a_2_face(t, 1, 4, 5);
  CHECK(m.record.delta == FDelta{0, 2, 0});
  CHECK(f_vector(m.result) - f_vector(t) == FDelta{0, 2, 0});
  CHECK(m.result.is_external(Edge{4, 5}));
  CHECK(m.record.created.size() == 2);
  CHECK(validate_ball(m.result).ok());
}

TEST_CASE("open preconditions") {
  CHECK(error_code([] { open_a_2_face(pair(), 1, 2, 3); }) == ErrorCode::kBadEdgePattern);
  CHECK(error_code([] { open_a_2_face(triple(), 4, 1, 5); }) == ErrorCode::kBadEdgePattern);
  CHECK(error_code([] { open_a_2_face(triple(), 1, 1, 5); }) == ErrorCode::kRepeatedNode);
  CHECK(error_code([] { open_a_2_face(triple(), 1, 2, 3); }) == ErrorCode::kUnknownFace);
}

TEST_CASE("remove a tetrahedron from the starred tetrahedron") {
  Triangulation t = starred_tetrahedron();
  auto removable = removable_tetrahedra(t);
  CHECK(removable.size() == 4);
  MoveResult m = remove_1_tetra(t, removable.front());
  CHECK(m.record.delta == FDelta{-1, 2, -1});
  CHECK(f_vector(m.result).t == 3);
  CHECK(m.result.internal_nodes().empty());
  CHECK(error_code([] { remove_1_tetra(pair(), {1, 2, 3, 4}); }) == ErrorCode::kNotRemovable);
}

TEST_CASE("split along a chord and along a longer path") {
  Rng rng(8);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    Triangulation t = random_instance(rng, i);
    for (NodeId n : t.external_nodes()) {
      auto path = random_split_path(t, n, rng, 2);
      if (!path) continue;
      MoveResult m = split_node(t, n, *path);
      long gamma = static_cast<long>(path->size()) - 1;
      CHECK(f_vector(m.result) - f_vector(t) == FDelta{gamma, 2, 0});
      auto [l, r] = std::pair(m.record.created[0], m.record.created[1]);
      CHECK(external_degree(m.result, l) + external_degree(m.result, r) ==
            external_degree(t, n) + 4);
      CHECK(m.result.has_edge(make_edge(l, r)));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("split preconditions") {
  Triangulation t = starred_tetrahedron();
  CHECK(error_code([&] { split_node(t, 5, {1, 2}); }) == ErrorCode::kNotExternal);
  CHECK(error_code([&] { split_node(t, 9, {1, 2}); }) == ErrorCode::kUnknownNode);
  CHECK(error_code([&] { split_node(t, 1, {2, 3}); }) == ErrorCode::kBadPath);
}

TEST_CASE("move names round trip") {
  for (MoveKind k : {MoveKind::kCut3Face, MoveKind::kOpen2Face, MoveKind::kRemove1Tetra,
                     MoveKind::kSplitNode, MoveKind::kIdentify, MoveKind::kAddTetra,
                     MoveKind::kCollapse, MoveKind::kCone})
    CHECK(move_kind_from_string(to_string(k)) == k);
  CHECK(to_string(MoveKind::kOpen2Face) == "open-a-2-face");
}

TEST_CASE("root carries over when its face survives") {
  Triangulation t = pair().with_root(Face{1, 2, 4});
  CutResult c = cut_a_3_face(t, Face{1, 2, 3});
  CHECK(c.first.root() == Face{1, 2, 4});
  CHECK_FALSE(c.second.root());
}

TEST_CASE("fresh node allocation skips used ids") {
  CHECK(allocate_nodes({1, 2, 4}, 3) == std::vector<NodeId>{3, 5, 6});
}

}  // namespace
