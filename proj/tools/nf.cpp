// nf: decompose 3-ball triangulations into trees of nuclei, and reassemble
// and count them. Reports are JSON on stdout (or indented text with
// --pretty). Exit status 2 marks a usage error and 1 a failed check or
// rejected input.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "nuclei/canonical.hpp"
#include "nuclei/error.hpp"
#include "nuclei/generators.hpp"
#include "nuclei/inverse.hpp"
#include "nuclei/report.hpp"

#ifndef NF_DEFAULT_CORPUS_DIR
#define NF_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using namespace nuclei;

namespace {

struct Globals {
  bool pretty = false;
  int jobs = 1;
  long growth_constant = 2016;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Looks the path up as given, then in $NF_CORPUS_DIR, then in the installed
// corpus; the embedded corpus answers for its own file names last.
Triangulation load(const std::string& path) {
  if (fs::exists(path)) return read_triangulation_file(path);
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("NF_CORPUS_DIR")) dirs.emplace_back(env);
  dirs.emplace_back(NF_DEFAULT_CORPUS_DIR);
  for (const auto& d : dirs)
    if (fs::exists(d / path)) return read_triangulation_file((d / path).string());
  std::string name = fs::path(path).filename().string();
  if (name == "table1.tet") return table1();
  if (name == "tetra.tet") return tetrahedron();
  throw Error(ErrorCode::kParse, "cannot read " + path);
}

std::vector<NodeId> ids(const std::string& csv, std::size_t expected, const char* flag) {
  std::vector<NodeId> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(static_cast<NodeId>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a positive node id");
    }
  }
  if (expected && out.size() != expected)
    throw UsageError(std::string(flag) + " expects " + std::to_string(expected) + " ids");
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

Json base_report(const std::string& command, const Triangulation& input) {
  return Json{{"command", command},
              {"input_digest", digest(input)},
              {"before", to_json(f_vector(input))}};
}

Json move_report(const std::string& command, const Triangulation& input, const MoveResult& m) {
  Json r = base_report(command, input);
  r["after"] = to_json(f_vector(m.result));
  r["output_digest"] = digest(m.result);
  r["move"] = to_json(m.record);
  r["validation"] = to_json(validate_ball(m.result));
  r["result"] = format_triangulation(m.result);
  return r;
}

ReducerOptions reducer_options(const Globals& g) {
  ReducerOptions o;
  o.growth_constant = g.growth_constant;
  return o;
}

std::vector<Triangulation> unrooted(std::vector<Triangulation> forest) {
  for (auto& t : forest) t = t.with_root(std::nullopt);
  return forest;
}

int emit(const Json& report, const Globals& g, bool ok) {
  std::cout << (g.pretty ? pretty(report) : report.dump(2) + "\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose 3-ball triangulations into trees of nuclei"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--pretty", g.pretty, "Indented text instead of JSON");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--growth-constant", g.growth_constant, "Constant C in delta <= C (t + n_i)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for the random generators");

  std::string file, edge, nodes, root, keep, path, catalog_file, code, s_text, kind, log_file,
      catalog_out;
  NodeId node = 0;
  int v = 0, weight = 30, tmax = 4, size = 6;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, ".tet file")->required();
    return sub;
  };
  auto* validate = with_file("validate", "Check ball conditions");
  auto* fvector = with_file("fvector", "f-vector and derived counts");
  auto* flowers = with_file("flowers", "External flower and hemisphere of a node");
  flowers->add_option("--node", node)->required();
  auto* reduce = with_file("reduce", "Eliminate internal nodes");
  auto* nuclei_cmd = with_file("nuclei", "Split a ball without internal nodes into nuclei");
  auto* decompose_cmd = with_file("decompose", "Eliminate internal nodes, then split");
  auto* canon = with_file("canon", "Canonical labeling");
  canon->add_option("--root", root, "Root face a,b,c (omit for the unrooted form)");
  auto* collapse = with_file("collapse", "Collapse an edge");
  collapse->add_option("--edge", edge)->required();
  auto* identify = with_file("identify", "Identify the two external faces at an edge");
  identify->add_option("--edge", edge)->required();
  identify->add_option("--nodes", nodes)->required();
  auto* add = with_file("add-tetra", "Cover an external node of degree 3");
  add->add_option("--node", node)->required();
  auto* split = with_file("split", "Split a node along a path");
  split->add_option("--node", node)->required();
  split->add_option("--path", path)->required();
  auto* cone = with_file("cone", "Cone the boundary except one face");
  cone->add_option("--keep", keep)->required();
  auto* replay_cmd = with_file("replay", "Apply a JSON move log");
  replay_cmd->add_option("--log", log_file)->required();

  auto* glue = app.add_subcommand("glue", "Assemble a tree of nuclei from its code");
  glue->add_option("code", code)->required();
  glue->add_option("--catalog", catalog_file, "Catalog JSON (default: tetrahedron only)");
  auto* count = app.add_subcommand("count-trees", "Count rooted trees of tetrahedra");
  count->add_option("v", v)->required();
  auto* bound = app.add_subcommand("bound-series", "Truncated bound series A_M(s)");
  bound->add_option("--catalog", catalog_file, "Catalog JSON (default: tetrahedron only)");
  bound->add_option("-M", weight)->required();
  bound->add_option("-s", s_text, "Rational s (default: s*)");
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate small balls and nuclei");
  enumerate->add_option("--tmax", tmax)->required();
  enumerate->add_option("--catalog-out", catalog_out, "Write the rooted nuclei found");
  auto* generate = app.add_subcommand("generate", "Emit a generated triangulation");
  generate->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"tree", "ball", "star", "double-star", "cone", "table1", "tetra"}));
  generate->add_option("--size", size, "Tree size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code_ = app.exit(e);
    return e.get_exit_code() == 0 ? code_ : 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    auto timed = [&](Json r) {
      r["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    };

    if (validate->parsed()) {
      Triangulation t = load(file);
      ValidationReport v_ = validate_ball(t);
      Json r = base_report("validate", t);
      r["validation"] = to_json(v_);
      r["nucleus"] = is_nucleus(t);
      r["tree_of_nuclei"] = is_tree_of_nuclei(t);
      return emit(timed(r), g, v_.ok());
    }
    if (fvector->parsed()) {
      Triangulation t = load(file);
      FVector f = f_vector(t);
      Json r = base_report("fvector", t);
      r["nodes"] = t.nodes().size();
      r["interior_tetrahedra"] = std::count_if(t.tets().begin(), t.tets().end(), [&](const Tet& x) {
        for (const Face& face : faces_of(x))
          if (t.is_external(face)) return false;
        return true;
      });
      r["f_s_at_most_t_plus_3"] = f.f_s <= f.t + 3;
      return emit(timed(r), g, f.euler_holds());
    }
    if (flowers->parsed()) {
      Triangulation t = load(file);
      Json r = base_report("flowers", t);
      r["flower"] = to_json(flower(t, node));
      r["external_degree"] = external_degree(t, node);
      return emit(timed(r), g, true);
    }
    if (reduce->parsed()) {
      Triangulation t = load(file);
      EliminationResult e = eliminate_internal_nodes(t, reducer_options(g));
      Json r = base_report("reduce", t);
      r["after"] = to_json(f_vector(e.result));
      r["output_digest"] = digest(e.result);
      r["replay_digest"] = digest(replay(t, e.log));
      r["log"] = to_json(e.log);
      r["ledger"] = to_json(e.ledger);
      Json splits = Json::array();
      for (const auto& s : e.splits) splits.push_back(to_json(s));
      r["splits"] = std::move(splits);
      r["result"] = format_triangulation(e.result);
      return emit(timed(r), g, e.ledger.ok());
    }
    if (nuclei_cmd->parsed() || decompose_cmd->parsed()) {
      Triangulation t = load(file);
      bool full = decompose_cmd->parsed();
      Json r = base_report(full ? "decompose" : "nuclei", t);
      Decomposition d;
      if (full) {
        d = decompose(t, reducer_options(g));
      } else {
        d.split = split_into_nuclei(t);
        d.log = d.split.log;
      }
      std::vector<Triangulation> out = unrooted(d.split.nuclei);
      r["output_digest"] = digest(out);
      r["replay_digest"] = digest(replay(t, d.log));
      bool replay_ok = r["output_digest"] == r["replay_digest"];
      if (full) {
        r["after_elimination"] = to_json(f_vector(d.elimination.result));
        r["ledger"] = to_json(d.elimination.ledger);
      }
      r["log"] = to_json(d.log);
      r["split"] = to_json(d.split);
      NucleusCatalog catalog;
      r["tree_code"] = format_tree_code(encode_tree(d.split, catalog));
      r["catalog"] = Json::parse(format_catalog(catalog));
      bool ok = replay_ok && (!full || d.elimination.ledger.ok());
      return emit(timed(r), g, ok);
    }
    if (canon->parsed()) {
      Triangulation t = load(file);
      Triangulation c = root.empty() ? canonical_form(t) : [&] {
        auto f = ids(root, 3, "--root");
        return canonical_label(t.with_root(Face{f[0], f[1], f[2]}));
      }();
      Json r = base_report("canon", t);
      r["output_digest"] = digest(c);
      r["result"] = format_triangulation(c);
      return emit(timed(r), g, true);
    }
    if (collapse->parsed()) {
      Triangulation t = load(file);
      auto e = ids(edge, 2, "--edge");
      return emit(timed(move_report("collapse", t, collapse_edge(t, e[0], e[1]))), g, true);
    }
    if (identify->parsed()) {
      Triangulation t = load(file);
      auto e = ids(edge, 2, "--edge");
      auto n = ids(nodes, 2, "--nodes");
      return emit(timed(move_report("identify", t, identify_faces(t, e[0], e[1], n[0], n[1]))), g,
                  true);
    }
    if (add->parsed()) {
      Triangulation t = load(file);
      return emit(timed(move_report("add-tetra", t, add_tetra(t, node))), g, true);
    }
    if (split->parsed()) {
      Triangulation t = load(file);
      return emit(timed(move_report("split", t, split_node(t, node, ids(path, 0, "--path")))), g,
                  true);
    }
    if (cone->parsed()) {
      Triangulation t = load(file);
      auto f = ids(keep, 3, "--keep");
      return emit(timed(move_report("cone", t, cone_ball(t, Face{f[0], f[1], f[2]}))), g, true);
    }
    if (replay_cmd->parsed()) {
      Triangulation t = load(file);
      std::ifstream in(log_file);
      if (!in) throw Error(ErrorCode::kParse, "cannot read " + log_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::kParse, std::string("move log: ") + e.what());
      }
      auto forest = replay(t, move_log_from_json(j.is_object() ? j.at("log") : j));
      Json r = base_report("replay", t);
      r["output_digest"] = digest(forest);
      Json parts = Json::array();
      for (const auto& p : forest) parts.push_back(format_triangulation(p));
      r["result"] = std::move(parts);
      return emit(timed(r), g, true);
    }
    if (glue->parsed()) {
      NucleusCatalog catalog =
          catalog_file.empty() ? tetrahedron_catalog() : read_catalog_file(catalog_file);
      TreeCode tree = parse_tree_code(code);
      Triangulation t = glue_tree(catalog, tree);
      Json r{{"command", "glue"},
             {"code", format_tree_code(tree)},
             {"vertices", tree_vertices(tree)},
             {"after", to_json(f_vector(t))},
             {"output_digest", digest(t)},
             {"result", format_triangulation(t)}};
      return emit(timed(r), g, true);
    }
    if (count->parsed()) {
      TreeCount c = count_trees_of_tetrahedra(v);
      Json r{{"command", "count-trees"},
             {"v", v},
             {"count", c.recurrence},
             {"recurrence", c.recurrence},
             {"gluing", c.gluing},
             {"agree", c.agree()}};
      return emit(timed(r), g, c.agree());
    }
    if (bound->parsed()) {
      NucleusCatalog catalog =
          catalog_file.empty() ? tetrahedron_catalog() : read_catalog_file(catalog_file);
      Rational s = s_text.empty() ? bound_radius(catalog_k1(catalog)) : parse_rational(s_text);
      BoundSeries b = bound_series(catalog, weight, s);
      Json r{{"command", "bound-series"}};
      r.update(to_json(b));
      return emit(timed(r), g, b.monotone);
    }
    if (enumerate->parsed()) {
      EnumerationOptions o;
      o.max_tets = tmax;
      o.jobs = g.jobs;
      Enumeration e = enumerate_balls(o);
      Json r{{"command", "enumerate"}};
      r.update(to_json(e));
      if (!catalog_out.empty()) {
        NucleusCatalog c = e.catalog;
        c.set_k1(e.k1_estimate);
        std::ofstream(catalog_out) << format_catalog(c) << "\n";
        r["catalog_file"] = catalog_out;
      }
      return emit(timed(r), g, true);
    }
    if (generate->parsed()) {
      Rng rng(g.seed);
      Triangulation t;
      if (kind == "tree") t = random_tree_of_tetrahedra(size, rng);
      if (kind == "ball") t = random_ball({}, rng);
      if (kind == "star") t = starred_tetrahedron();
      if (kind == "double-star") t = doubly_starred_tetrahedron();
      if (kind == "cone") {
        Triangulation b = random_ball({}, rng);
        t = cone_ball(b, b.external_faces().front()).result;
      }
      if (kind == "table1") t = table1();
      if (kind == "tetra") t = tetrahedron();
      std::cout << format_triangulation(t);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Json r{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    std::cout << (g.pretty ? pretty(r) : r.dump(2) + "\n");
    return 1;
  }
  return 2;
}
