#include "doctest.h"

#include "nuclei/complex.hpp"
#include "nuclei/generators.hpp"
#include "support.hpp"

using namespace nuclei;
using nuclei::testing::error_code;

namespace {

// <t, f_s, n_i> plus the derived counts of a single tetrahedron, by hand.
TEST_CASE("tetrahedron f-vector") {
  FVector v = f_vector(tetrahedron());
  CHECK(v.t == 1);
  CHECK(v.f_s == 4);
  CHECK(v.n_i == 0);
  CHECK(v.n_s == 4);
  CHECK(v.e_s == 6);
  CHECK(v.e_i == 0);
  CHECK(v.f_i == 0);
  CHECK(v.euler_holds());
}

TEST_CASE("stellar subdivision adds one internal node") {
  FVector v = f_vector(starred_tetrahedron());
  CHECK(v.t == 4);
  CHECK(v.f_s == 4);
  CHECK(v.n_i == 1);
  CHECK(v.e_i == 4);
  CHECK(v.f_i == 6);
  CHECK(starred_tetrahedron().internal_nodes() == std::vector<NodeId>{5});

  FVector w = f_vector(doubly_starred_tetrahedron());
  CHECK(w.t == 7);
  CHECK(w.n_i == 2);
}

TEST_CASE("twelve-node nucleus") {
  Triangulation t = table1();
  FVector v = f_vector(t);
  CHECK(t.size() == 37);
  CHECK(t.nodes().size() == 12);
  CHECK(v.f_s == 20);
  CHECK(v.n_i == 0);
  CHECK(v.euler_holds());
  CHECK(validate_ball(t).ok());
  int interior = 0;
  for (const Tet& x : t.tets()) {
    bool touches = false;
    for (const Face& f : faces_of(x)) touches |= t.is_external(f);
    interior += !touches;
  }
  CHECK(interior == 17);
}

TEST_CASE("parse errors name the line") {
  auto message = [](std::string_view text) {
    try {
      parse_triangulation(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("1 2 3 4\n# c\n1 2 x 4\n").find("line 3") != std::string::npos);
  CHECK(message("1 2 3\n").find("line 1") != std::string::npos);
  CHECK(error_code([] { parse_triangulation("1 2 3 4\n4 3 2 1\n"); }) ==
        ErrorCode::kDuplicateTetrahedron);
  CHECK(error_code([] { parse_triangulation("1 1 3 4\n"); }) == ErrorCode::kRepeatedNode);
  CHECK(error_code([] { parse_triangulation("root: 1 2 9\n1 2 3 4\n"); }) == ErrorCode::kBadRoot);
}

TEST_CASE("format and parse round trip with root") {
  Triangulation t = doubly_starred_tetrahedron().with_root(Face{2, 1, 3});
  Triangulation back = parse_triangulation(format_triangulation(t, "comment"));
  CHECK(back == t);
  CHECK(digest(back) == digest(t));
  CHECK(digest(back) != digest(back.with_root(std::nullopt)));
}

TEST_CASE("validation rejects non-balls") {
  SUBCASE("two tetrahedra sharing only an edge") {
    Triangulation t({{1, 2, 3, 4}, {1, 2, 5, 6}});
    ValidationReport r = validate_ball(t);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("edge-links")->passed);
  }
  SUBCASE("disconnected") {
    Triangulation t({{1, 2, 3, 4}, {5, 6, 7, 8}});
    CHECK_FALSE(validate_ball(t).find("connected")->passed);
  }
  SUBCASE("boundary of a 4-simplex is a sphere, not a ball") {
    Triangulation t({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
    CHECK_FALSE(validate_ball(t).find("boundary-sphere")->passed);
  }
}

TEST_CASE("flower boundary equals the hemisphere boundary") {
  Rng rng(3);
  std::vector<Triangulation> corpus{table1(), starred_tetrahedron(), doubly_starred_tetrahedron()};
  for (int i = 0; i < 12; ++i) corpus.push_back(random_ball({}, rng));
  for (const auto& t : corpus)
    for (NodeId n : t.external_nodes()) {
      NodeFlower f = flower(t, n);
      CHECK(f.external == f.hemisphere.boundary());
      CHECK(f.external.size() == external_degree(t, n));
    }
}

TEST_CASE("internal node has a sphere as hemisphere") {
  NodeFlower f = flower(starred_tetrahedron(), 5);
  CHECK(f.external.empty());
  CHECK(f.hemisphere.is_sphere());
  CHECK(f.hemisphere.triangles().size() == 4);
}

TEST_CASE("edge flower of an external edge") {
  Triangulation t({{1, 2, 3, 4}, {1, 2, 3, 5}});
  EdgeFlower f = flower(t, Edge{1, 2});
  CHECK(f.external == std::vector<NodeId>{4, 5});
  CHECK(f.hemisphere == std::vector<NodeId>{4, 3, 5});
}

TEST_CASE("depth map") {
  DepthMap d = depth_map(doubly_starred_tetrahedron());
  CHECK(d.max_depth() == 1);
  CHECK(d.at(1).size() == 2);
  CHECK(d.at(0).size() == 4);
}

TEST_CASE("constructor errors") {
  CHECK(error_code([] { Triangulation({{1, 2, 3, 4}, {1, 2, 3, 4}}); }) ==
        ErrorCode::kDuplicateTetrahedron);
  CHECK(error_code([] { Triangulation({{1, 2, 2, 4}}); }) == ErrorCode::kRepeatedNode);
  CHECK(error_code([] { Triangulation({{1, 2, 3, 4}}, Face{1, 2, 5}); }) == ErrorCode::kBadRoot);
}

}  // namespace
