#include "doctest.h"

#include "nuclei/reducer.hpp"
#include "support.hpp"

using namespace nuclei;

namespace {

int count_class(const Triangulation& t, NodeClass kind) {
  int n = 0;
  for (const auto& [node, c] : classify_depth1(t)) n += c.kind == kind;
  return n;
}

TEST_CASE("star center is C0") {
  Classification c = classify_node(starred_tetrahedron(), 5);
  CHECK(c.kind == NodeClass::kC0);
  REQUIRE(c.removable);
  CHECK(std::find(c.removable->begin(), c.removable->end(), 5) != c.removable->end());
  CHECK(to_string(NodeClass::kC1) == "C1");
}

TEST_CASE("starred tetrahedron reduces by one removal") {
  EliminationResult e = eliminate_internal_nodes(starred_tetrahedron());
  FVector v = f_vector(e.result);
  CHECK(v.t == 3);
  CHECK(v.f_s == 6);
  CHECK(v.n_i == 0);
  CHECK(e.splits.empty());
  REQUIRE(e.log.size() == 1);
  CHECK(e.log[0].kind == MoveKind::kRemove1Tetra);
  CHECK(e.ledger.ok());
}

TEST_CASE("doubly starred tetrahedron") {
  Triangulation t = doubly_starred_tetrahedron();
  EliminationResult e = eliminate_internal_nodes(t);
  FVector v = f_vector(e.result);
  CHECK(v.t == 5);
  CHECK(v.f_s == 8);
  CHECK(v.n_i == 0);
  CHECK(e.ledger.before == f_vector(t));
  CHECK(e.ledger.after == v);
  CHECK(e.ledger.ok());
}

TEST_CASE("sweeps promote C2 to C1 and C1 to C0") {
  Rng rng(1);
  int c2_seen = 0;
  for (int i = 0; i < 40; ++i) {
    Triangulation t = random_ball({5, 2, 2 + i % 6}, rng);
    c2_seen += count_class(t, NodeClass::kC2);
    std::vector<NodeId> external(t.external_nodes().begin(), t.external_nodes().end());
    SweepResult a = sweep_c2_to_c1(t, external);
    CHECK(count_class(a.result, NodeClass::kC2) == 0);
    CHECK(a.trace.edge_disjoint);
    CHECK(f_vector(a.result).n_i == f_vector(t).n_i);
    for (const auto& s : a.trace.splits) CHECK(s.degree_identity());

    SweepResult b = sweep_c1_to_c0(a.result, a.trace.frontier);
    CHECK(count_class(b.result, NodeClass::kC1) == 0);
    CHECK(count_class(b.result, NodeClass::kC2) == 0);
    CHECK(validate_ball(b.result).ok());
  }
  CHECK(c2_seen > 0);
}

TEST_CASE("elimination on random balls") {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    Triangulation t = random_ball({4 + i % 6, i % 4, 1 + i % 10}, rng);
    EliminationResult e = eliminate_internal_nodes(t);
    CHECK(e.result.internal_nodes().empty());
    CHECK(e.ledger.ok());
    CHECK(e.ledger.ratio <= 2016);
    CHECK(validate_ball(e.result).ok());
    // Replaying the log from the input reaches the same triangulation.
    auto forest = replay(t, e.log);
    REQUIRE(forest.size() == 1);
    CHECK(forest[0].tets() == e.result.tets());
  }
}

TEST_CASE("ledger levels follow the input depths") {
  Rng rng(4);
  Triangulation t = random_ball({6, 1, 8}, rng);
  EliminationResult e = eliminate_internal_nodes(t);
  int depth = 0;
  for (const auto& level : e.ledger.levels) {
    CHECK(level.depth == depth++);
    CHECK(level.removed <= 0);
    CHECK(level.delta_c2 >= 0);
    CHECK(level.delta_c1 >= 0);
  }
  CHECK(e.ledger.e_after - e.ledger.e_before ==
        [&] {
          long sum = 0;
          for (const auto& l : e.ledger.levels) sum += l.delta_c2 + l.delta_c1 + l.removed;
          return sum;
        }());
}

TEST_CASE("a tight growth constant is reported, not hidden") {
  ReducerOptions options;
  options.growth_constant = 1;
  options.size_constant = 1;
  Rng rng(2);
  bool flagged = false;
  for (int i = 0; i < 20 && !flagged; ++i) {
    EliminationResult e = eliminate_internal_nodes(random_ball({6, 2, 6}, rng), options);
    CHECK(e.ledger.growth_constant == 1);
    flagged = !e.ledger.size_bound_holds || !e.ledger.growth_bound_holds;
  }
  CHECK(flagged);
}

TEST_CASE("no internal nodes means no moves") {
  EliminationResult e = eliminate_internal_nodes(table1());
  CHECK(e.log.empty());
  CHECK(e.ledger.delta == 0);
  CHECK(e.result.tets() == table1().tets());
}

}  // namespace
