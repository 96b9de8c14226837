#include "nuclei/trees.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "nuclei/canonical.hpp"
#include "nuclei/error.hpp"

namespace nuclei {

std::vector<Triangulation> NucleusCatalog::nuclei() const {
  std::vector<Triangulation> out;
  for (const auto& e : entries_) out.insert(out.end(), e.examples.begin(), e.examples.end());
  return out;
}

std::size_t NucleusCatalog::size() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.examples.size();
  return n;
}

const Triangulation& NucleusCatalog::nucleus(int index) const {
  if (index >= 0)
    for (const auto& e : entries_) {
      if (index < static_cast<int>(e.examples.size())) return e.examples[index];
      index -= static_cast<int>(e.examples.size());
    }
  throw Error(ErrorCode::kOutOfRange, "nucleus address not in catalog");
}

int NucleusCatalog::find(const Triangulation& rooted) const {
  Triangulation key = canonical_label(rooted);
  int base = 0;
  for (const auto& e : entries_) {
    for (std::size_t i = 0; i < e.examples.size(); ++i)
      if (e.examples[i].tets() == key.tets()) return base + static_cast<int>(i);
    base += static_cast<int>(e.examples.size());
  }
  return -1;
}

CatalogEntry& NucleusCatalog::entry(int t, int f) {
  for (auto& e : entries_)
    if (e.t == t && e.f == f) return e;
  entries_.push_back({t, f, 0, {}});
  return entries_.back();
}

int NucleusCatalog::add(const Triangulation& rooted) {
  if (int found = find(rooted); found >= 0) return found;
  Triangulation key = canonical_label(rooted);
  FVector v = f_vector(key);
  CatalogEntry& e = entry(static_cast<int>(v.t), static_cast<int>(v.f_s));
  e.examples.push_back(key);
  e.count = std::max<long>(e.count, static_cast<long>(e.examples.size()));
  return find(key);
}

void NucleusCatalog::set_count(int t, int f, long count) { entry(t, f).count = count; }

std::map<std::pair<int, int>, long> NucleusCatalog::counts() const {
  std::map<std::pair<int, int>, long> out;
  for (const auto& e : entries_) out[{e.t, e.f}] += e.count;
  return out;
}

NucleusCatalog tetrahedron_catalog() {
  NucleusCatalog c;
  c.add(Triangulation({{1, 2, 3, 4}}, Face{1, 2, 3}));
  return c;
}

NucleusCatalog parse_catalog(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("catalog: ") + e.what());
  }
  NucleusCatalog c;
  if (j.contains("K1") && !j["K1"].is_null()) c.set_k1(j["K1"].get<long>());
  for (const auto& e : j.value("entries", nlohmann::json::array())) {
    int t = e.at("t").get<int>();
    int f = e.at("f").get<int>();
    for (const auto& text : e.value("examples", nlohmann::json::array())) {
      Triangulation n = parse_triangulation(text.get<std::string>());
      if (!n.root()) n = n.with_root(n.external_faces().front());
      FVector v = f_vector(n);
      if (v.t != t || v.f_s != f)
        throw Error(ErrorCode::kParse, "catalog example " + v.str() + " filed under (" +
                                           std::to_string(t) + "," + std::to_string(f) + ")");
      c.add(n);
    }
    long count = e.value("count", 0L);
    long have = 0;
    for (const auto& x : c.entries())
      if (x.t == t && x.f == f) have = x.count;
    c.set_count(t, f, std::max(count, have));
  }
  return c;
}

std::string format_catalog(const NucleusCatalog& catalog) {
  nlohmann::json j;
  j["K1"] = catalog.k1() ? nlohmann::json(*catalog.k1()) : nlohmann::json(nullptr);
  j["entries"] = nlohmann::json::array();
  for (const auto& e : catalog.entries()) {
    nlohmann::json x{{"t", e.t}, {"f", e.f}, {"count", e.count}};
    x["examples"] = nlohmann::json::array();
    for (const auto& n : e.examples) x["examples"].push_back(format_triangulation(n));
    j["entries"].push_back(std::move(x));
  }
  return j.dump(2);
}

NucleusCatalog read_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

namespace {

class CodeParser {
 public:
  explicit CodeParser(std::string_view s) : s_(s) {}

  TreeCode parse() {
    TreeCode root = vertex(false);
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return root;
  }

 private:
  TreeCode vertex(bool child) {
    TreeCode v;
    v.nucleus = number();
    skip();
    if (child) {
      expect('.');
      v.face = number();
    }
    skip();
    if (peek() == '(') {
      ++pos_;
      do {
        v.children.push_back(vertex(true));
        skip();
      } while (peek() == ',' && ++pos_);
      expect(')');
    }
    return v;
  }

  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse,
                "tree code at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<Face> gluing_faces(const Triangulation& canonical) {
  std::vector<Face> out;
  for (const Face& f : canonical.external_faces())
    if (f != Face{1, 2, 3}) out.push_back(f);
  return out;
}

struct Gluer {
  const NucleusCatalog& catalog;
  std::vector<Tet> tets;
  NodeId next = 1;

  // Places `code` with its root nodes (1, 2, 3) sent to `root`.
  void place(const TreeCode& code, const std::array<NodeId, 3>& root) {
    const Triangulation& n = catalog.nucleus(code.nucleus);
    std::map<NodeId, NodeId> ids{{1, root[0]}, {2, root[1]}, {3, root[2]}};
    for (NodeId x : n.nodes())
      if (!ids.count(x)) ids[x] = next++;
    for (const Tet& t : n.tets()) tets.push_back({ids[t[0]], ids[t[1]], ids[t[2]], ids[t[3]]});
    auto faces = gluing_faces(n);
    std::set<int> used;
    for (const TreeCode& child : code.children) {
      if (child.face < 0 || child.face >= static_cast<int>(faces.size()))
        throw Error(ErrorCode::kOutOfRange, "face index " + std::to_string(child.face) +
                                                " outside 0.." +
                                                std::to_string(faces.size() - 1));
      if (!used.insert(child.face).second)
        throw Error(ErrorCode::kFaceMultiplicity,
                    "two children glued to face " + std::to_string(child.face));
      const Face& f = faces[child.face];
      place(child, {ids[f[0]], ids[f[1]], ids[f[2]]});
    }
  }
};

TreeCode encode_vertex(const NucleusSplit& split, int index, NucleusCatalog& catalog) {
  const Triangulation& piece = split.nuclei[index];
  TreeCode code;
  code.nucleus = catalog.add(piece);
  auto labels = canonical_labels(piece);
  auto faces = gluing_faces(canonical_label(piece));
  for (const GlueEdge& e : split.edges) {
    if (e.parent != index) continue;
    std::array<NodeId, 3> order = e.face;
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return labels.at(a) < labels.at(b); });
    Face key = sorted(Face{labels.at(order[0]) + 1, labels.at(order[1]) + 1,
                           labels.at(order[2]) + 1});
    auto it = std::find(faces.begin(), faces.end(), key);
    ensure(it != faces.end(), "glued face is not an external face of its parent");

    NucleusSplit rerooted = split;
    rerooted.nuclei[e.child] = split.nuclei[e.child].with_root(order);
    TreeCode child = encode_vertex(rerooted, e.child, catalog);
    child.face = static_cast<int>(it - faces.begin());
    code.children.push_back(std::move(child));
  }
  std::sort(code.children.begin(), code.children.end(),
            [](const TreeCode& a, const TreeCode& b) { return a.face < b.face; });
  return code;
}

}  // namespace

TreeCode parse_tree_code(std::string_view text) { return CodeParser(text).parse(); }

std::string format_tree_code(const TreeCode& code) {
  std::string out = std::to_string(code.nucleus);
  if (code.face >= 0) out += "." + std::to_string(code.face);
  if (!code.children.empty()) {
    out += "(";
    for (std::size_t i = 0; i < code.children.size(); ++i) {
      if (i) out += ",";
      out += format_tree_code(code.children[i]);
    }
    out += ")";
  }
  return out;
}

int tree_vertices(const TreeCode& code) {
  int n = 1;
  for (const auto& c : code.children) n += tree_vertices(c);
  return n;
}

Triangulation glue_tree(const NucleusCatalog& catalog, const TreeCode& code) {
  Gluer g{catalog, {}, 4};
  g.place(code, {1, 2, 3});
  Triangulation t(std::move(g.tets), Face{1, 2, 3});
  if (!is_tree_of_nuclei(t)) invariant_failure("glued complex is not a tree of nuclei");
  return canonical_label(t);
}

TreeCode encode_tree(const NucleusSplit& split, NucleusCatalog& catalog) {
  ensure(!split.nuclei.empty(), "empty nucleus split");
  NucleusSplit rooted = split;
  if (!rooted.nuclei[split.root].root())
    rooted.nuclei[split.root] =
        rooted.nuclei[split.root].with_root(rooted.nuclei[split.root].external_faces().front());
  return encode_vertex(rooted, split.root, catalog);
}

std::uint64_t count_trees_by_recurrence(int v) {
  if (v < 0 || v > 20) throw Error(ErrorCode::kOutOfRange, "tree size " + std::to_string(v));
  // Three ordered slots per tetrahedron: c(v) = sum over a+b+d = v-1 of c(a)c(b)c(d).
  std::vector<std::uint64_t> c(v + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= v; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = 0; a + b < n; ++b) c[n] += c[a] * c[b] * c[n - 1 - a - b];
  return c[v];
}

std::uint64_t count_trees_by_gluing(int v) {
  if (v < 1 || v > 8) throw Error(ErrorCode::kOutOfRange, "tree size " + std::to_string(v));
  std::set<std::vector<Tet>> level{canonical_label(Triangulation({{1, 2, 3, 4}}, Face{1, 2, 3})).tets()};
  for (int size = 1; size < v; ++size) {
    std::set<std::vector<Tet>> grown;
    for (const auto& tets : level) {
      Triangulation t(tets, Face{1, 2, 3});
      NodeId fresh = t.max_node() + 1;
      for (const Face& f : t.external_faces()) {
        if (f == Face{1, 2, 3}) continue;
        std::vector<Tet> more = tets;
        more.push_back({f[0], f[1], f[2], fresh});
        grown.insert(canonical_label(Triangulation(std::move(more), Face{1, 2, 3})).tets());
      }
    }
    level = std::move(grown);
  }
  return level.size();
}

TreeCount count_trees_of_tetrahedra(int v) {
  if (v < 1 || v > 8) throw Error(ErrorCode::kOutOfRange, "tree size must be in 1..8");
  return {v, count_trees_by_recurrence(v), count_trees_by_gluing(v)};
}

}  // namespace nuclei
