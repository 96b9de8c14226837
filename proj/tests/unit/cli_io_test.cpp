#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include "nuclei/report.hpp"
#include "support.hpp"

using namespace nuclei;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the nf binary with `args`; stderr is discarded.
Run nf(const std::string& args, const std::string& env = "") {
  std::string command = env + " " + NF_BINARY + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

const std::string kTable1 = std::string(NF_CORPUS_DIR) + "/table1.tet";

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/nf_cli_test_") + name;
  std::ofstream(path) << text;
  return path;
}

TEST_CASE("move records survive JSON") {
  MoveRecord r{MoveKind::kSplitNode, 2, {5, 1, 7, 3}, {2, 2, 0}, {5, 9}};
  CHECK(move_record_from_json(to_json(r)) == r);
  Json log = to_json(std::vector<MoveRecord>{r, r});
  CHECK(move_log_from_json(log).size() == 2);
  CHECK(nuclei::testing::error_code([] { move_record_from_json(Json{{"kind", "warp"}}); })
            .has_value());
}

TEST_CASE("decomposition log replays to the reported nuclei") {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    Triangulation t = random_ball({}, rng);
    Decomposition d = decompose(t);
    Json log = to_json(d.log);
    auto forest = replay(t, move_log_from_json(Json::parse(log.dump())));
    std::vector<Triangulation> expected = d.split.nuclei;
    for (auto& n : expected) n = n.with_root(std::nullopt);
    CHECK(digest(forest) == digest(expected));
  }
}

TEST_CASE("pretty rendering") {
  Json j{{"command", "x"}, {"list", {1, 2}}, {"nested", {{"a", 1}}}, {"rows", {{{"k", 1}}}}};
  std::string text = pretty(j);
  CHECK(text.find("command: x\n") != std::string::npos);
  CHECK(text.find("list: [1,2]\n") != std::string::npos);
  CHECK(text.find("nested:\n  a: 1\n") != std::string::npos);
  CHECK(text.find("rows:\n  - k: 1\n") != std::string::npos);
}

TEST_CASE("validate the corpus") {
  Run r = nf("validate " + kTable1);
  CHECK(r.status == 0);
  Json j = json_of(r);
  CHECK(j["validation"]["ok"] == true);
  CHECK(j["nucleus"] == true);
  CHECK(j["before"]["t"] == 37);
}

TEST_CASE("decomposing the twelve-node nucleus gives it back with no growth") {
  Json j = json_of(nf("decompose " + kTable1));
  CHECK(j["split"]["count"] == 1);
  CHECK(j["ledger"]["delta"] == 0);
  CHECK(j["output_digest"] == j["replay_digest"]);
  CHECK(j["tree_code"] == "0");
}

TEST_CASE("count-trees") {
  Json j = json_of(nf("count-trees 4"));
  CHECK(j["count"] == 55);
  CHECK(j["agree"] == true);
  CHECK(nf("count-trees 0").status == 1);
}

TEST_CASE("bound-series") {
  Run r = nf("bound-series -M 30 -s 1/10");
  CHECK(r.status == 0);
  Json j = json_of(r);
  CHECK(j["monotone"] == true);
  CHECK(j["partial"][0]["value"] == "1");
  CHECK(j["approx"].get<double>() <= 5);
  CHECK(nf("bound-series -M 30 -s 0.5").status == 1);
}

TEST_CASE("moves from the command line") {
  std::string star = temp_file("star.tet", format_triangulation(starred_tetrahedron()));
  Json cone = json_of(nf("cone " + std::string(NF_CORPUS_DIR) + "/tetra.tet --keep 1,2,3"));
  CHECK(cone["move"]["delta"] == Json{{"t", 3}, {"f", 0}, {"n", 1}});
  CHECK(cone["validation"]["ok"] == true);

  Json reduced = json_of(nf("reduce " + star));
  CHECK(reduced["after"]["n_i"] == 0);
  CHECK(reduced["ledger"]["ok"] == true);

  std::string three = temp_file("three.tet", format_triangulation(Triangulation(
                                                 {{1, 2, 3, 4}, {1, 2, 4, 5}, {1, 2, 5, 6}})));
  Json id = json_of(nf("identify " + three + " --edge 1,2 --nodes 3,6"));
  CHECK(id["move"]["delta"]["f"] == -2);
  CHECK(nf("nuclei " + star).status == 1);  // internal nodes left
}

TEST_CASE("glue and canon agree") {
  Json glued = json_of(nf("glue '0(0.0,0.2)'"));
  CHECK(glued["after"]["t"] == 3);
  std::string path = temp_file("glued.tet", glued["result"].get<std::string>());
  Json canon = json_of(nf("canon " + path + " --root 1,2,3"));
  CHECK(canon["output_digest"] == glued["output_digest"]);
}

TEST_CASE("exit codes") {
  CHECK(nf("").status == 2);
  CHECK(nf("validate").status == 2);
  CHECK(nf("collapse " + kTable1 + " --edge 1,x").status == 2);
  CHECK(nf("validate /nonexistent/file.tet").status == 1);
  std::string bad = temp_file("bad.tet", "1 2 3 4\n1 2 q 5\n");
  Run r = nf("validate " + bad);
  CHECK(r.status == 1);
  CHECK(r.out.find("line 2") != std::string::npos);
  std::string sphere = temp_file(
      "sphere.tet", "1 2 3 4\n1 2 3 5\n1 2 4 5\n1 3 4 5\n2 3 4 5\n");
  CHECK(nf("validate " + sphere).status == 1);
}

TEST_CASE("corpus directory override and flags after the subcommand") {
  Run r = nf("fvector tetra.tet --pretty", "NF_CORPUS_DIR=" + std::string(NF_CORPUS_DIR));
  CHECK(r.status == 0);
  CHECK(r.out.find("f_s: 4") != std::string::npos);
  Run embedded = nf("fvector table1.tet", "NF_CORPUS_DIR=/nonexistent");
  CHECK(json_of(embedded)["before"]["t"] == 37);
}

TEST_CASE("generated instances are reproducible by seed") {
  CHECK(nf("generate ball --seed 5").out == nf("--seed 5 generate ball").out);
  CHECK(nf("generate tree --size 5 --seed 1").out != nf("generate tree --size 5 --seed 2").out);
}

}  // namespace
