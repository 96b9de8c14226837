#include "doctest.h"

#include "nuclei/bound.hpp"
#include "nuclei/enumerate.hpp"
#include "support.hpp"

using namespace nuclei;
using namespace nuclei::testing;

namespace {

Triangulation pair() { return Triangulation({{1, 2, 3, 4}, {1, 2, 3, 5}}); }

Triangulation shuffled(const Triangulation& t, Rng& rng) {
  std::vector<NodeId> image(t.nodes().begin(), t.nodes().end());
  for (NodeId& n : image) n += 100;
  std::shuffle(image.begin(), image.end(), rng);
  std::map<NodeId, NodeId> map;
  for (std::size_t i = 0; i < image.size(); ++i) map[t.nodes()[i]] = image[i];
  return relabel(t, map);
}

std::uint64_t fuss_catalan(int v) {
  // C(3v, v) / (2v + 1)
  std::uint64_t c = 1;
  for (int i = 1; i <= v; ++i) c = c * (2 * v + i) / i;
  return c / (2 * v + 1);
}

TEST_CASE("canonical labels of two glued tetrahedra") {
  auto labels = canonical_labels(pair().with_root(Face{1, 2, 4}));
  CHECK(labels.at(1) == 0);
  CHECK(labels.at(2) == 1);
  CHECK(labels.at(4) == 2);
  std::set<int> all;
  for (auto [n, l] : labels) all.insert(l);
  CHECK(all == std::set<int>{0, 1, 2, 3, 4});
  CHECK(canonical_label(pair().with_root(Face{4, 1, 2})).root() == Face{1, 2, 3});
  CHECK(error_code([] { canonical_labels(pair()); }) == ErrorCode::kBadRoot);
}

TEST_CASE("canonical form ignores node names") {
  Rng rng(6);
  for (const Triangulation& t : {table1(), doubly_starred_tetrahedron(), random_ball({}, rng)}) {
    Triangulation c = canonical_form(t);
    for (int k = 0; k < 5; ++k) CHECK(canonical_form(shuffled(t, rng)) == c);
  }
  CHECK_FALSE(isomorphic(starred_tetrahedron(), pair()));
}

TEST_CASE("rooted isomorphism depends on the root") {
  Triangulation t = Triangulation({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 6}});
  CHECK(rooted_isomorphic(t.with_root(Face{1, 3, 5}), t.with_root(Face{1, 3, 5})));
  CHECK_FALSE(rooted_isomorphic(t.with_root(Face{1, 3, 5}), t.with_root(Face{3, 4, 2})));
}

TEST_CASE("identify preconditions") {
  CHECK(error_code([] { identify_faces(tetrahedron(), 1, 2, 3, 4); }) == ErrorCode::kAdjacent);
  CHECK(error_code([] { identify_faces(pair(), 1, 2, 4, 5); }) == ErrorCode::kCommonNeighbor);
  CHECK(error_code([] { identify_faces(pair(), 1, 9, 4, 5); }) == ErrorCode::kUnknownEdge);
  CHECK(error_code([] { identify_faces(pair(), 1, 2, 4, 4); }) == ErrorCode::kRepeatedNode);
}

TEST_CASE("identify closes a path of three tetrahedra around an edge") {
  // Three tetrahedra fanned around (1,2); the two free faces at (1,2) have
  // apexes 3 and 6.
  Triangulation fan({{1, 2, 3, 4}, {1, 2, 4, 5}, {1, 2, 5, 6}});
  MoveResult m = identify_faces(fan, 1, 2, 3, 6);
  CHECK(m.record.delta == FDelta{0, -2, 0});
  CHECK(isomorphic(m.result, Triangulation({{1, 2, 3, 4}, {1, 2, 4, 5}, {1, 2, 3, 5}})));
  CHECK_FALSE(m.result.is_external(Edge{1, 2}));
}

TEST_CASE("add-tetra preconditions and effect") {
  CHECK(error_code([] { add_tetra(pair(), 1); }) == ErrorCode::kBadDegree);
  CHECK(error_code([] { add_tetra(pair(), 4); }) == ErrorCode::kFaceMultiplicity);
  CHECK(error_code([] { add_tetra(pair(), 8); }) == ErrorCode::kUnknownNode);
  Triangulation three = remove_1_tetra(starred_tetrahedron(), {1, 2, 3, 5}).result;
  MoveResult m = add_tetra(three, 5);
  CHECK(m.record.delta == FDelta{1, -2, 1});
  CHECK(m.result.tets() == starred_tetrahedron().tets());
}

TEST_CASE("collapse undoes a split") {
  Triangulation t = table1();
  Rng rng(12);
  int done = 0;
  for (NodeId n : t.external_nodes()) {
    auto path = random_split_path(t, n, rng);
    if (!path) continue;
    MoveResult s = split_node(t, n, *path);
    MoveResult c = collapse_edge(s.result, s.record.created[0], s.record.created[1]);
    CHECK(c.record.delta == FDelta{-(static_cast<long>(path->size()) - 1), -2, 0});
    CHECK(isomorphic(c.result, t));
    ++done;
  }
  CHECK(done > 0);
  CHECK(error_code([] { collapse_edge(tetrahedron(), 1, 2); }).has_value());
}

TEST_CASE("cone over a tetrahedron is the starred tetrahedron") {
  MoveResult m = cone_ball(tetrahedron(), Face{1, 2, 3});
  CHECK(m.record.delta == FDelta{3, 0, 1});
  CHECK(isomorphic(m.result, starred_tetrahedron()));
  FVector before = f_vector(table1());
  FVector after = f_vector(cone_ball(table1(), table1().external_faces()[0]).result);
  CHECK(after - before == FDelta{before.f_s - 1, 4 - before.f_s, before.n_s - 3});
}

TEST_CASE("tree codes parse and print") {
  TreeCode c = parse_tree_code(" 0 ( 1.2 , 0.0 ( 3.1 ) ) ");
  CHECK(format_tree_code(c) == "0(1.2,0.0(3.1))");
  CHECK(tree_vertices(c) == 4);
  CHECK(c.children[1].children[0].nucleus == 3);
  for (const char* bad : {"", "0(", "0(1)", "0(1.)", "0)", "a", "0(1.2,)"})
    CHECK(error_code([&] { parse_tree_code(bad); }) == ErrorCode::kParse);
}

TEST_CASE("gluing tetrahedra") {
  NucleusCatalog cat = tetrahedron_catalog();
  Triangulation two = glue_tree(cat, parse_tree_code("0(0.1)"));
  CHECK(f_vector(two).t == 2);
  CHECK(f_vector(two).f_s == 6);
  CHECK(two.root() == Face{1, 2, 3});
  CHECK(is_tree_of_nuclei(two));
  CHECK(error_code([&] { glue_tree(cat, parse_tree_code("0(0.3)")); }) == ErrorCode::kOutOfRange);
  CHECK(error_code([&] { glue_tree(cat, parse_tree_code("1")); }) == ErrorCode::kOutOfRange);
  CHECK(error_code([&] { glue_tree(cat, parse_tree_code("0(0.1,0.1)")); }) ==
        ErrorCode::kFaceMultiplicity);
}

TEST_CASE("encode inverts glue") {
  NucleusCatalog cat = tetrahedron_catalog();
  Triangulation big = table1();
  cat.add(big.with_root(big.external_faces()[3]));
  for (const char* text : {"0", "1", "1(0.4,0.18(0.0))", "0(0.0,1.2(0.7))", "1(1.0(1.5),1.11)"}) {
    TreeCode code = parse_tree_code(text);
    Triangulation glued = glue_tree(cat, code);
    NucleusCatalog copy = cat;
    CHECK(format_tree_code(encode_tree(decompose(glued).split, copy)) == text);
    CHECK(copy.size() == cat.size());
  }
  // Children are listed by face index whatever order the code used.
  Triangulation glued = glue_tree(cat, parse_tree_code("0(1.2,0.0)"));
  NucleusCatalog copy = cat;
  CHECK(format_tree_code(encode_tree(decompose(glued).split, copy)) == "0(0.0,1.2)");
}

TEST_CASE("tree counts") {
  for (int v = 1; v <= 7; ++v) {
    TreeCount c = count_trees_of_tetrahedra(v);
    CHECK(c.agree());
    CHECK(c.recurrence == fuss_catalan(v));
  }
  CHECK(count_trees_by_recurrence(0) == 1);
  CHECK(error_code([] { count_trees_of_tetrahedra(0); }) == ErrorCode::kOutOfRange);
  CHECK(error_code([] { count_trees_of_tetrahedra(9); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("catalog JSON") {
  NucleusCatalog cat = tetrahedron_catalog();
  cat.add(table1().with_root(table1().external_faces()[0]));
  cat.set_count(37, 20, 9);
  cat.set_k1(4);
  NucleusCatalog back = parse_catalog(format_catalog(cat));
  CHECK(back.size() == 2);
  CHECK(back.k1() == 4);
  CHECK(back.counts() == cat.counts());
  CHECK(back.nucleus(1) == cat.nucleus(1));
  CHECK(error_code([] { parse_catalog("{"); }) == ErrorCode::kParse);
  CHECK(error_code([] {
          parse_catalog(R"({"entries":[{"t":1,"f":6,"count":1,"examples":["1 2 3 4"]}]})");
        }) == ErrorCode::kParse);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("3/12") == Rational(1, 4));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("-.5") == Rational(-1, 2));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  for (const char* bad : {"", "1/0", "x", "1.2.3", "1/"})
    CHECK(error_code([&] { parse_rational(bad); }) == ErrorCode::kParse);
}

TEST_CASE("K1 and the radius") {
  NucleusCatalog cat = tetrahedron_catalog();
  CHECK(catalog_k1(cat) == 2);
  cat.set_count(2, 6, 5);  // 2^2 < 5 <= 3^2
  CHECK(catalog_k1(cat) == 3);
  cat.set_k1(7);
  CHECK(catalog_k1(cat) == 7);
  CHECK(bound_radius(2) == Rational(1, 10));
  CHECK(bound_radius(10) == Rational(1, 20));
}

TEST_CASE("bound series of the tetrahedron catalog") {
  BoundSeries b = bound_series(tetrahedron_catalog(), 40, Rational(1, 10));
  for (const auto& [k, c] : b.coefficients) {
    if (k[0] == 0) continue;
    CHECK(k[1] == k[0]);
    CHECK(k[2] == 2 * k[0] + 2);
    CHECK(c == fuss_catalan(k[0]));
  }
  CHECK(b.coefficients.size() == 5);  // v = 5 weighs 42
  CHECK(b.partial[0] == 1);
  CHECK(b.partial[10] == 1 + Rational(1, 10000000000LL));
  CHECK(b.monotone);
}

TEST_CASE("bound series with a second nucleus, by hand") {
  NucleusCatalog cat = tetrahedron_catalog();
  cat.set_count(2, 6, 2);
  BoundSeries b = bound_series(cat, 40, Rational(1, 20));
  CHECK(b.coefficients.at({1, 2, 6}) == 2);
  // Tetrahedron root with a (2,6) child in one of 3 slots: 3 * 2; (2,6) root
  // with a tetrahedron child in one of 5 slots: 5 * 2.
  CHECK(b.coefficients.at({2, 3, 8}) == 16);
}

TEST_CASE("bound series arguments") {
  NucleusCatalog cat = tetrahedron_catalog();
  CHECK(error_code([&] { bound_series(cat, 10, Rational(1, 5)); }) == ErrorCode::kOutOfRange);
  CHECK(error_code([&] { bound_series(cat, 10, Rational(-1, 5)); }) == ErrorCode::kOutOfRange);
  CHECK(error_code([&] { bound_series(cat, 201, Rational(0)); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("enumeration of small balls") {
  Enumeration e = enumerate_balls({3, true, 1});
  CHECK(e.balls == std::map<int, long>{{1, 1}, {2, 1}, {3, 2}});
  CHECK(e.nuclei == std::map<std::pair<int, int>, long>{{{1, 4}, 1}});
  CHECK(e.catalog.size() == 1);
  CHECK(e.k1_estimate == 2);

  Enumeration threaded = enumerate_balls({4, true, 4});
  Enumeration serial = enumerate_balls({4, true, 1});
  CHECK(threaded.balls == serial.balls);
  CHECK(threaded.balls.at(4) >= 2);  // the star and the tree of four at least
  CHECK(error_code([] { enumerate_balls({7, true, 1}); }) == ErrorCode::kOutOfRange);
}

}  // namespace
