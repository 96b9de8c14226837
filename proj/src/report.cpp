#include "nuclei/report.hpp"

#include <sstream>

#include "nuclei/error.hpp"

namespace nuclei {

Json to_json(const FVector& v) {
  return Json{{"t", v.t},       {"f_s", v.f_s}, {"n_i", v.n_i}, {"n_s", v.n_s},
              {"n_tot", v.n_tot}, {"e_s", v.e_s}, {"e_i", v.e_i}, {"e_tot", v.e_tot},
              {"f_i", v.f_i},   {"f_tot", v.f_tot}, {"euler", v.euler_holds()}};
}

Json to_json(const FDelta& d) { return Json{{"t", d.t}, {"f", d.f}, {"n", d.n}}; }

Json to_json(const MoveRecord& r) {
  return Json{{"kind", to_string(r.kind)},
              {"target", r.target},
              {"args", r.args},
              {"delta", to_json(r.delta)},
              {"created", r.created}};
}

Json to_json(const std::vector<MoveRecord>& log) {
  Json out = Json::array();
  for (const auto& r : log) out.push_back(to_json(r));
  return out;
}

Json to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  return Json{{"ok", r.ok()}, {"checks", std::move(checks)}};
}

Json to_json(const SplitTrace& s) {
  return Json{{"hemisphere", s.hemisphere},
              {"piece", s.piece},
              {"owner", s.owner},
              {"core", s.core},
              {"path", s.path},
              {"left", s.left},
              {"right", s.right},
              {"degree", s.degree},
              {"degree_left", s.degree_left},
              {"degree_right", s.degree_right}};
}

Json to_json(const GrowthLedger& g) {
  Json levels = Json::array();
  for (const auto& l : g.levels)
    levels.push_back(Json{{"depth", l.depth},
                          {"a", l.a},
                          {"b", l.b},
                          {"c", l.c},
                          {"a_hat_prev", l.a_hat_prev},
                          {"delta_c2", l.delta_c2},
                          {"delta_c1", l.delta_c1},
                          {"removed", l.removed},
                          {"splits_c2", l.splits_c2},
                          {"splits_c1", l.splits_c1},
                          {"removals", l.removals}});
  return Json{{"before", to_json(g.before)},
              {"after", to_json(g.after)},
              {"internal_edges_before", g.e_before},
              {"internal_edges_after", g.e_after},
              {"delta", g.delta},
              {"ratio", g.ratio},
              {"growth_constant", g.growth_constant},
              {"size_constant", g.size_constant},
              {"max_extension", g.max_extension},
              {"checks",
               Json{{"sums", g.sums_hold},
                    {"a_hat_bound", g.a_hat_bound_holds},
                    {"edge_disjoint", g.edge_disjoint},
                    {"degree_identity", g.degree_identity},
                    {"growth_bound", g.growth_bound_holds},
                    {"size_bound", g.size_bound_holds}}},
              {"ok", g.ok()},
              {"levels", std::move(levels)}};
}

Json triangulation_json(const Triangulation& t) {
  Json tets = Json::array();
  for (const Tet& x : t.tets()) tets.push_back(x);
  return Json{{"tets", std::move(tets)},
              {"root", t.root() ? Json(*t.root()) : Json(nullptr)}};
}

Json to_json(const NucleusSplit& s) {
  Json nuclei = Json::array();
  for (const auto& n : s.nuclei) {
    FVector v = f_vector(n);
    Json x = triangulation_json(n);
    x["t"] = v.t;
    x["f_s"] = v.f_s;
    nuclei.push_back(std::move(x));
  }
  Json edges = Json::array();
  for (const auto& e : s.edges)
    edges.push_back(Json{{"parent", e.parent}, {"child", e.child}, {"face", e.face}});
  return Json{{"count", s.nuclei.size()}, {"root", s.root}, {"nuclei", std::move(nuclei)},
              {"edges", std::move(edges)}};
}

Json to_json(const BoundSeries& b) {
  Json partial = Json::array();
  for (std::size_t m = 0; m < b.partial.size(); ++m)
    partial.push_back(Json{{"M", m},
                           {"value", format_rational(b.partial[m])},
                           {"approx", to_double(b.partial[m])}});
  Json coefficients = Json::array();
  for (const auto& [k, c] : b.coefficients)
    coefficients.push_back(Json{{"v", k[0]}, {"t", k[1]}, {"f", k[2]}, {"count", c.str()}});
  return Json{{"M", b.max_weight},
              {"s", format_rational(b.s)},
              {"s_star", format_rational(b.s_star)},
              {"K1", b.k1},
              {"monotone", b.monotone},
              {"value", b.partial.empty() ? "0" : format_rational(b.partial.back())},
              {"approx", b.partial.empty() ? 0.0 : to_double(b.partial.back())},
              {"partial", std::move(partial)},
              {"coefficients", std::move(coefficients)}};
}

Json to_json(const Enumeration& e) {
  Json balls = Json::array(), nuclei = Json::array(), rho = Json::array();
  for (const auto& [t, n] : e.balls) balls.push_back(Json{{"t", t}, {"count", n}});
  for (const auto& [tf, n] : e.nuclei)
    nuclei.push_back(Json{{"t", tf.first}, {"f", tf.second}, {"count", n}});
  for (const auto& [tf, n] : e.catalog.counts())
    rho.push_back(Json{{"t", tf.first}, {"f", tf.second}, {"rooted", n}});
  return Json{{"tmax", e.max_tets},
              {"complete", false},
              {"balls", std::move(balls)},
              {"nuclei", std::move(nuclei)},
              {"rho", std::move(rho)},
              {"K1_estimate", e.k1_estimate}};
}

Json to_json(const Disk& d) {
  Json labels = Json::object();
  for (const auto& [n, l] : d.labels()) labels[std::to_string(n)] = l.str();
  return Json{{"boundary", d.boundary()},
              {"interior", d.interior_nodes()},
              {"triangles", d.triangles()},
              {"labels", std::move(labels)}};
}

Json to_json(const NodeFlower& f) {
  return Json{{"node", f.node}, {"external", f.external}, {"hemisphere", to_json(f.hemisphere)}};
}

MoveRecord move_record_from_json(const Json& j) {
  try {
    MoveRecord r;
    r.kind = move_kind_from_string(j.at("kind").get<std::string>());
    r.target = j.value("target", 0);
    r.args = j.at("args").get<std::vector<NodeId>>();
    if (j.contains("delta"))
      r.delta = {j["delta"].at("t").get<long>(), j["delta"].at("f").get<long>(),
                 j["delta"].at("n").get<long>()};
    if (j.contains("created")) r.created = j["created"].get<std::vector<NodeId>>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("move record: ") + e.what());
  }
}

std::vector<MoveRecord> move_log_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "move log must be an array");
  std::vector<MoveRecord> out;
  for (const auto& r : j) out.push_back(move_record_from_json(r));
  return out;
}

namespace {

bool scalar_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured() && !(x.is_array() && scalar_array(x))) return false;
  return true;
}

void render(std::ostream& out, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      out << pad << k << ":";
      if (v.is_structured() && !(v.is_array() && scalar_array(v)) && !v.empty()) {
        out << "\n";
        render(out, v, indent + 2);
      } else {
        out << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        std::ostringstream item;
        render(item, v, indent + 2);
        std::string s = item.str();
        s.replace(indent, 2, "- ");
        out << s;
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string pretty(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace nuclei
