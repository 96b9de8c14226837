#include "doctest.h"

#include <set>

#include "nuclei/disk.hpp"
#include "nuclei/generators.hpp"
#include "support.hpp"

using namespace nuclei;
using nuclei::testing::error_code;

namespace {

Disk wheel(int rim) {
  std::vector<Face> triangles;
  NodeId center = rim + 1;
  for (int i = 1; i <= rim; ++i) triangles.push_back(make_face(center, i, i % rim + 1));
  return Disk(triangles);
}

std::map<NodeId, Label> labels(std::initializer_list<std::pair<NodeId, int>> items) {
  std::map<NodeId, Label> out;
  for (auto [n, k] : items) out[n] = Label::negative(k);
  return out;
}

bool has(const std::vector<AdmissibilityViolation>& v, Condition c) {
  for (const auto& x : v)
    if (x.condition == c) return true;
  return false;
}

TEST_CASE("interior edges of a wheel") {
  // 1 interior node, p rim nodes: spokes only, 3*1 + p - 3 = p.
  for (int p = 3; p <= 9; ++p) CHECK(wheel(p).interior_edges().size() == std::size_t(p));
}

TEST_CASE("interior edge count on random disks") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Disk d = random_disk(1 + i % 30, rng);
    std::size_t n = d.interior_nodes().size(), p = d.boundary().size();
    CHECK(d.interior_edges().size() == 3 * n + p - 3);
  }
}

TEST_CASE("boundary cycle is normalized") {
  Disk d({make_face(4, 5, 6), make_face(4, 6, 7)});
  CHECK(d.boundary() == std::vector<NodeId>{4, 5, 6, 7});
  CHECK(normalize_cycle({6, 5, 4, 7}) == std::vector<NodeId>{4, 5, 6, 7});
  CHECK(cycle_from_edges({{1, 2}, {2, 3}, {1, 3}, {4, 5}}).empty());
}

TEST_CASE("non-disk input is rejected") {
  CHECK(error_code([] { Disk({make_face(1, 2, 3), make_face(1, 4, 5)}); }) ==
        ErrorCode::kInvariant);
}

TEST_CASE("the three admissibility violations") {
  Disk w = wheel(4);
  SUBCASE("one label") {
    auto v = check_admissible(w.with_labels(labels({{1, -1}, {2, -1}, {3, -1}, {4, -1}})));
    CHECK(has(v, Condition::kK1));
  }
  SUBCASE("a label split into two arcs") {
    auto v = check_admissible(w.with_labels(labels({{1, -1}, {2, -2}, {3, -1}, {4, -2}})));
    CHECK(has(v, Condition::kK2));
    CHECK_FALSE(has(v, Condition::kK1));
  }
  SUBCASE("a chord inside one label") {
    Disk fan({make_face(1, 2, 3), make_face(1, 3, 4), make_face(1, 4, 5)});
    auto v = check_admissible(fan.with_labels(labels({{1, -1}, {2, -1}, {3, -1}, {4, -2}, {5, -2}})));
    CHECK(has(v, Condition::kK3));
    CHECK_FALSE(has(v, Condition::kK2));
  }
  SUBCASE("admissible") {
    CHECK(check_admissible(w.with_labels(labels({{1, -1}, {2, -1}, {3, -2}, {4, -2}}))).empty());
  }
  SUBCASE("unlabeled node") {
    CHECK(has(check_admissible(w.with_labels(labels({{1, -1}}))), Condition::kUnlabeled));
  }
}

TEST_CASE("splitting path prefers a chord") {
  Disk fan({make_face(1, 2, 3), make_face(1, 3, 4), make_face(1, 4, 5)});
  Disk d = fan.with_labels(labels({{1, -1}, {2, -1}, {3, -2}, {4, -2}, {5, -1}}));
  REQUIRE(check_admissible(d).empty());
  SplittingPath p = find_splitting_path(d);
  CHECK(p.size() == 2);
  CHECK(d.labels().at(p.front()) != d.labels().at(p.back()));
}

TEST_CASE("splitting path through the interior") {
  Disk d = wheel(6).with_labels(labels({{1, -1}, {2, -1}, {3, -1}, {4, -2}, {5, -2}, {6, -2}}));
  SplittingPath p = find_splitting_path(d);
  REQUIRE(p.size() == 3);
  CHECK(p[1] == 7);
  CHECK(is_splitting_path(d, p));
}

TEST_CASE("bad paths") {
  Disk d = wheel(5);
  CHECK_FALSE(is_splitting_path(d, {1, 2}));     // boundary edge
  CHECK_FALSE(is_splitting_path(d, {1, 6, 1}));  // not simple
  CHECK_FALSE(is_splitting_path(d, {6, 1}));     // starts inside
  CHECK(error_code([&] { require_splitting_path(d, {1, 3}); }) == ErrorCode::kBadPath);
}

TEST_CASE("cut_disk splits the triangles and labels the path") {
  Disk d = wheel(6).with_labels(labels({{1, -1}, {2, -1}, {3, -1}, {4, -2}, {5, -2}, {6, -2}}));
  SplittingPath p = find_splitting_path(d);
  DiskCut c = cut_disk(d, p, Label::sequence("L"), Label::sequence("R"));
  CHECK(c.left.triangles().size() + c.right.triangles().size() == d.triangles().size());
  CHECK(c.left.labels().at(p[1]) == Label::sequence("L"));
  CHECK(c.right.labels().at(p[1]) == Label::sequence("R"));
  CHECK(check_admissible(c.left).empty());
  CHECK(check_admissible(c.right).empty());
  CHECK(c.left.has_node(1));
}

TEST_CASE("cuts keep random admissible disks admissible") {
  Rng rng(19);
  int cuts = 0;
  for (int i = 0; i < 400; ++i) {
    Disk d = random_disk(2 + i % 25, rng);
    const auto& b = d.boundary();
    std::map<NodeId, Label> l;
    std::size_t half = 1 + i % (b.size() - 1);
    for (std::size_t k = 0; k < b.size(); ++k) l[b[k]] = Label::negative(k < half ? -1 : -2);
    Disk labeled = d.with_labels(l);
    if (!check_admissible(labeled).empty()) continue;
    DiskCut c = cut_disk(labeled, find_splitting_path(labeled), Label::sequence("L"),
                         Label::sequence("R"));
    CHECK(check_admissible(c.left).empty());
    CHECK(check_admissible(c.right).empty());
    ++cuts;
  }
  CHECK(cuts > 50);
}

TEST_CASE("three disjoint paths to the boundary") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    Disk d = random_disk(3 + i % 20, rng);
    for (NodeId x : d.interior_nodes()) {
      auto paths = disjoint_paths_to_boundary(d, x);
      std::set<NodeId> ends, inner;
      for (const auto& p : paths) {
        REQUIRE(p.size() >= 2);
        CHECK(p.front() == x);
        CHECK(d.is_boundary_node(p.back()));
        ends.insert(p.back());
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
          CHECK_FALSE(d.is_boundary_node(p[k]));
          CHECK(inner.insert(p[k]).second);
        }
      }
      CHECK(ends.size() == 3);
    }
  }
}

TEST_CASE("label words") {
  CHECK(Label::flip_last("LLR") == "LLL");
  CHECK(Label::sequence("RL").str() == "RL");
  CHECK(Label::negative(-3).str() == "-3");
  CHECK(Label::negative(-2) < Label::sequence("L"));
}

}  // namespace
