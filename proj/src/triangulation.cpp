#include "nuclei/triangulation.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "nuclei/error.hpp"

namespace nuclei {

std::string to_string(const std::vector<NodeId>& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(path[i]);
  }
  return out + "]";
}

Triangulation::Triangulation() : Triangulation(std::vector<Tet>{}) {}

Triangulation::Triangulation(std::vector<Tet> tets, std::optional<Face> root) {
  auto data = std::make_shared<Data>();
  for (Tet& t : tets) {
    t = sorted(t);
    for (std::size_t i = 0; i < 4; ++i) {
      if (t[i] <= 0)
        throw Error(ErrorCode::kOutOfRange,
                    "node ids must be positive in " + to_string(t));
      if (i > 0 && t[i] == t[i - 1])
        throw Error(ErrorCode::kRepeatedNode, "tetrahedron " + to_string(t));
    }
  }
  std::sort(tets.begin(), tets.end());
  for (std::size_t i = 1; i < tets.size(); ++i)
    if (tets[i] == tets[i - 1])
      throw Error(ErrorCode::kDuplicateTetrahedron,
                  "tetrahedron " + to_string(tets[i]));
  data->tets = std::move(tets);

  for (std::size_t i = 0; i < data->tets.size(); ++i) {
    const Tet& t = data->tets[i];
    for (const Face& f : faces_of(t)) data->face_tets[f].push_back(i);
    for (const Edge& e : edges_of(t)) data->edge_tets[e].push_back(i);
    for (NodeId n : t) data->node_tets[n].push_back(i);
  }
  for (const auto& [n, _] : data->node_tets) data->nodes.push_back(n);
  for (const auto& [f, owners] : data->face_tets) {
    if (owners.size() != 1) continue;
    data->external_faces.push_back(f);
    for (const Edge& e : edges_of(f)) data->external_edges.insert(e);
    for (NodeId n : f) data->external_nodes.insert(n);
  }
  if (root) {
    Face r = *root;
    if (r[0] == r[1] || r[0] == r[2] || r[1] == r[2] ||
        !data->face_tets.count(sorted(r)))
      throw Error(ErrorCode::kBadRoot,
                  "root " + to_string(r) + " is not a face of any tetrahedron");
    data->root = r;
  }
  data_ = std::move(data);
}

Triangulation Triangulation::with_root(std::optional<Face> root) const {
  return Triangulation(tets(), root);
}

bool Triangulation::has_node(NodeId n) const {
  return data_->node_tets.count(n) > 0;
}
bool Triangulation::has_edge(const Edge& e) const {
  return data_->edge_tets.count(sorted(e)) > 0;
}
bool Triangulation::has_face(const Face& f) const {
  return data_->face_tets.count(sorted(f)) > 0;
}
bool Triangulation::has_tet(const Tet& t) const {
  return std::binary_search(tets().begin(), tets().end(), sorted(t));
}

bool Triangulation::is_external(const Face& f) const {
  auto it = data_->face_tets.find(sorted(f));
  return it != data_->face_tets.end() && it->second.size() == 1;
}
bool Triangulation::is_external(const Edge& e) const {
  return data_->external_edges.count(sorted(e)) > 0;
}
bool Triangulation::is_external_node(NodeId n) const {
  return data_->external_nodes.count(n) > 0;
}

std::vector<NodeId> Triangulation::internal_nodes() const {
  std::vector<NodeId> out;
  for (NodeId n : nodes())
    if (!is_external_node(n)) out.push_back(n);
  return out;
}

std::vector<Edge> Triangulation::internal_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, _] : edge_tets())
    if (!is_external(e)) out.push_back(e);
  return out;
}

std::vector<Face> Triangulation::internal_faces() const {
  std::vector<Face> out;
  for (const auto& [f, owners] : face_tets())
    if (owners.size() != 1) out.push_back(f);
  return out;
}

std::vector<NodeId> Triangulation::neighbors(NodeId n) const {
  std::set<NodeId> out;
  auto it = data_->node_tets.find(n);
  if (it == data_->node_tets.end()) return {};
  for (std::size_t i : it->second)
    for (NodeId m : tets()[i])
      if (m != n) out.insert(m);
  return {out.begin(), out.end()};
}

NodeId Triangulation::fresh_node() const {
  NodeId candidate = 1;
  for (NodeId n : nodes()) {
    if (n != candidate) break;
    ++candidate;
  }
  return candidate;
}

NodeId Triangulation::max_node() const {
  return nodes().empty() ? 0 : nodes().back();
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

NodeId parse_id(const std::string& word, std::size_t line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || value <= 0 || value > 1'000'000'000)
    throw Error(ErrorCode::kMalformedLine,
                "line " + std::to_string(line_no) + ": '" + word +
                    "' is not a positive integer");
  return static_cast<NodeId>(value);
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  std::vector<Tet> tets;
  std::vector<std::size_t> lines;
  std::optional<Face> root;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line = line.substr(first);
    if (line.rfind("root:", 0) == 0) {
      if (root)
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": second root directive");
      auto words = split_words(line.substr(5));
      if (words.size() != 3)
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) +
                        ": root needs exactly 3 node ids");
      root = Face{parse_id(words[0], line_no), parse_id(words[1], line_no),
                  parse_id(words[2], line_no)};
      continue;
    }
    auto words = split_words(line);
    if (words.size() != 4)
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected 4 node ids, got " +
                      std::to_string(words.size()));
    Tet t{};
    for (std::size_t i = 0; i < 4; ++i) t[i] = parse_id(words[i], line_no);
    auto s = sorted(t);
    if (s[0] == s[1] || s[1] == s[2] || s[2] == s[3])
      throw Error(ErrorCode::kRepeatedNode,
                  "line " + std::to_string(line_no) + ": " + to_string(t));
    tets.push_back(t);
    lines.push_back(line_no);
  }
  std::map<Tet, std::size_t> seen;
  for (std::size_t i = 0; i < tets.size(); ++i) {
    auto [it, inserted] = seen.emplace(sorted(tets[i]), lines[i]);
    if (!inserted)
      throw Error(ErrorCode::kDuplicateTetrahedron,
                  "line " + std::to_string(lines[i]) + ": " + to_string(tets[i]) +
                      " repeats line " + std::to_string(it->second));
  }
  return Triangulation(std::move(tets), root);
}

std::string format_triangulation(const Triangulation& t, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  if (t.root()) {
    const Face& r = *t.root();
    out += "root: " + std::to_string(r[0]) + ' ' + std::to_string(r[1]) + ' ' +
           std::to_string(r[2]) + '\n';
  }
  for (const Tet& tet : t.tets()) {
    out += std::to_string(tet[0]) + ' ' + std::to_string(tet[1]) + ' ' +
           std::to_string(tet[2]) + ' ' + std::to_string(tet[3]) + '\n';
  }
  return out;
}

Triangulation read_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_triangulation(buffer.str());
}

namespace {

std::string fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace

std::string digest(const Triangulation& t) {
  return fnv1a(format_triangulation(t));
}

std::string digest(const std::vector<Triangulation>& forest) {
  std::vector<std::string> parts;
  for (const auto& t : forest) parts.push_back(format_triangulation(t));
  std::sort(parts.begin(), parts.end());
  std::string all;
  for (const auto& p : parts) all += p + "--\n";
  return fnv1a(all);
}

}  // namespace nuclei
