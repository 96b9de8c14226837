#include "nuclei/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "nuclei/bound.hpp"
#include "nuclei/canonical.hpp"
#include "nuclei/error.hpp"
#include "nuclei/inverse.hpp"

namespace nuclei {
namespace {

std::vector<Triangulation> neighbors_of(const Triangulation& t, const EnumerationOptions& o) {
  std::vector<Triangulation> out;
  auto keep = [&](const Triangulation& r) {
    if (static_cast<int>(r.size()) <= o.max_tets) out.push_back(r.with_root(std::nullopt));
  };
  auto attempt = [&](auto&& move) {
    try {
      keep(move());
    } catch (const Error&) {
    }
  };

  if (static_cast<int>(t.size()) < o.max_tets) {
    NodeId fresh = t.max_node() + 1;
    for (const Face& f : t.external_faces()) {
      std::vector<Tet> tets = t.tets();
      tets.push_back({f[0], f[1], f[2], fresh});
      keep(Triangulation(std::move(tets)));
    }
    if (o.internal_nodes)
      for (NodeId x : t.external_nodes()) attempt([&] { return add_tetra(t, x).result; });
  }
  for (const Edge& e : t.external_edges()) {
    std::vector<NodeId> apex;
    for (const Face& f : t.external_faces())
      if (std::find(f.begin(), f.end(), e[0]) != f.end() &&
          std::find(f.begin(), f.end(), e[1]) != f.end())
        apex.push_back(difference(f, e)[0]);
    if (apex.size() == 2)
      attempt([&] { return identify_faces(t, e[0], e[1], apex[0], apex[1]).result; });
    attempt([&] { return collapse_edge(t, e[0], e[1]).result; });
  }
  for (const Edge& e : t.internal_edges())
    attempt([&] { return collapse_edge(t, e[0], e[1]).result; });
  return out;
}

// Canonical forms of `items`, computed on up to `jobs` threads.
std::vector<Triangulation> canonical_forms(const std::vector<Triangulation>& items, int jobs) {
  std::vector<Triangulation> out(items.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = canonical_form(items[i]);
  };
  std::size_t n = items.size();
  std::size_t parts = std::clamp<std::size_t>(static_cast<std::size_t>(jobs), 1, std::max<std::size_t>(n, 1));
  std::vector<std::future<void>> running;
  for (std::size_t p = 0; p < parts; ++p)
    running.push_back(std::async(std::launch::async, work, n * p / parts, n * (p + 1) / parts));
  for (auto& r : running) r.get();
  return out;
}

}  // namespace

Enumeration enumerate_balls(const EnumerationOptions& options) {
  if (options.max_tets < 1 || options.max_tets > 6)
    throw Error(ErrorCode::kOutOfRange, "enumeration size must be in 1..6");
  Enumeration out;
  out.max_tets = options.max_tets;

  std::set<std::vector<Tet>> seen;
  Triangulation start = canonical_form(Triangulation({{1, 2, 3, 4}}));
  seen.insert(start.tets());
  std::vector<Triangulation> frontier{start}, found{start};
  while (!frontier.empty()) {
    std::vector<Triangulation> candidates;
    for (const auto& t : frontier) {
      auto next = neighbors_of(t, options);
      candidates.insert(candidates.end(), next.begin(), next.end());
    }
    frontier.clear();
    for (auto& c : canonical_forms(candidates, options.jobs)) {
      if (!seen.insert(c.tets()).second) continue;
      frontier.push_back(c);
      found.push_back(c);
    }
  }

  std::sort(found.begin(), found.end(), [](const Triangulation& a, const Triangulation& b) {
    return std::pair(a.size(), a.tets()) < std::pair(b.size(), b.tets());
  });
  for (const auto& t : found) {
    ++out.balls[static_cast<int>(t.size())];
    if (!is_nucleus(t)) continue;
    int f = static_cast<int>(t.external_faces().size());
    ++out.nuclei[{static_cast<int>(t.size()), f}];
    for (const Face& face : t.external_faces())
      for (const auto& order : std::vector<std::array<int, 3>>{
               {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}})
        out.catalog.add(t.with_root(Face{face[order[0]], face[order[1]], face[order[2]]}));
  }
  out.k1_estimate = catalog_k1(out.catalog);
  return out;
}

}  // namespace nuclei
