#include "nuclei/reducer.hpp"

#include <algorithm>
#include <set>

#include "nuclei/error.hpp"

namespace nuclei {

std::string to_string(NodeClass c) {
  switch (c) {
    case NodeClass::kC0: return "C0";
    case NodeClass::kC1: return "C1";
    case NodeClass::kC2: return "C2";
  }
  return "?";
}

Classification classify_node(const Triangulation& t, NodeId x) {
  Classification out;
  for (auto i : t.node_tets().at(x)) {
    const Tet& tet = t.tets()[i];
    if (is_removable(t, tet) && !t.is_external_node(x)) {
      out.kind = NodeClass::kC0;
      out.removable = tet;
      return out;
    }
  }
  for (auto i : t.node_tets().at(x)) {
    const Tet& tet = t.tets()[i];
    for (const Face& f : faces_of(tet)) {
      if (!contains(f, x)) continue;
      auto rest = difference(f, std::array<NodeId, 1>{x});
      if (!t.is_external(make_edge(rest[0], rest[1]))) continue;
      if (!out.witness || f < *out.witness) out.witness = f;
    }
  }
  if (out.witness) out.kind = NodeClass::kC1;
  return out;
}

std::map<NodeId, Classification> classify_depth1(const Triangulation& t) {
  std::map<NodeId, Classification> out;
  for (const auto& [n, d] : depth_map(t).depth)
    if (d == 1) out[n] = classify_node(t, n);
  return out;
}

namespace {

bool is_c2(const Triangulation& t, NodeId x) {
  return t.has_node(x) && !t.is_external_node(x) &&
         classify_node(t, x).kind == NodeClass::kC2;
}

bool is_c0(const Triangulation& t, NodeId x) {
  return !t.is_external_node(x) && classify_node(t, x).kind == NodeClass::kC0;
}

bool has_prefix(const std::string& word, const std::string& prefix) {
  return word.compare(0, prefix.size(), prefix) == 0;
}

// Binary tree of pieces of one hemisphere, and the bookkeeping shared by
// both sweeps.
class PieceTree {
 public:
  struct Piece {
    std::string name;
    Disk disk;
    NodeId owner = 0;
    bool leaf = true;
  };

  PieceTree(NodeId n_star, Disk hemisphere) : n_star_(n_star) {
    for (const Edge& e : hemisphere.interior_edges()) interior_.insert(e);
    pieces_.push_back({"", std::move(hemisphere), n_star, true});
  }

  std::vector<Piece>& pieces() { return pieces_; }

  std::vector<NodeId> leaf_owners() const {
    std::vector<NodeId> out;
    for (const auto& p : pieces_)
      if (p.leaf) out.push_back(p.owner);
    return out;
  }

  // Boundary neighbor of u in I(owner) lying outside the piece, preferring
  // current nodes descending from the piece named `prefix`.
  NodeId tip(const Triangulation& t, std::size_t piece, NodeId u,
             const std::optional<std::string>& prefix, NodeId avoid) const {
    const Piece& p = pieces_[piece];
    NodeFlower fl = flower(t, p.owner);
    std::set<NodeId> preferred;
    if (prefix)
      for (const auto& q : pieces_)
        if (q.leaf && has_prefix(q.name, *prefix)) preferred.insert(q.owner);
    NodeId best = 0;
    bool best_preferred = false;
    for (NodeId w : fl.hemisphere.neighbors(u)) {
      if (!fl.hemisphere.is_boundary_node(w) || p.disk.has_node(w) || w == avoid) continue;
      bool pref = preferred.count(w) > 0;
      if (best == 0 || (pref && !best_preferred) || (pref == best_preferred && w < best)) {
        best = w;
        best_preferred = pref;
      }
    }
    if (best == 0)
      invariant_failure("no cone tip next to node " + std::to_string(u) + " in I(" +
                        std::to_string(p.owner) + ")");
    return best;
  }

  // Splits the owner of `piece` along `path` and cuts the piece along `core`.
  void split(Triangulation& t, std::size_t piece, const std::vector<NodeId>& core,
             const std::vector<NodeId>& path, SweepTrace& trace) {
    Piece parent = pieces_[piece];
    SplitTrace s;
    s.hemisphere = n_star_;
    s.piece = parent.name;
    s.owner = parent.owner;
    s.core = core;
    s.path = path;
    s.degree = external_degree(t, parent.owner);

    MoveResult m = split_node(t, parent.owner, path);
    t = m.result;
    s.left = m.record.created[0];
    s.right = m.record.created[1];
    s.degree_left = external_degree(t, s.left);
    s.degree_right = external_degree(t, s.right);

    DiskCut cut = cut_disk(parent.disk, core, Label::sequence(parent.name + "R"),
                           Label::sequence(parent.name + "L"));
    const Face& probe = cut.left.triangles().front();
    NodeId left_owner = t.has_tet(make_tet(s.left, probe[0], probe[1], probe[2])) ? s.left
                                                                                   : s.right;
    NodeId right_owner = left_owner == s.left ? s.right : s.left;
    const Face& other = cut.right.triangles().front();
    ensure(t.has_tet(make_tet(right_owner, other[0], other[1], other[2])),
           "piece halves are not coned by the split nodes");

    for (std::size_t i = 0; i + 1 < core.size(); ++i) {
      Edge e = make_edge(core[i], core[i + 1]);
      if (!interior_.count(e)) continue;
      if (!used_.insert(e).second) trace.edge_disjoint = false;
    }
    pieces_[piece].leaf = false;
    pieces_.push_back({parent.name + "L", cut.left, left_owner, true});
    pieces_.push_back({parent.name + "R", cut.right, right_owner, true});
    trace.moves.push_back(m.record);
    trace.splits.push_back(std::move(s));
  }

 private:
  NodeId n_star_;
  std::vector<Piece> pieces_;
  std::set<Edge> interior_;
  std::set<Edge> used_;
};

Disk labeled_hemisphere(const Triangulation& t, NodeId n) {
  Disk h = flower(t, n).hemisphere;
  std::map<NodeId, Label> labels;
  int k = 0;
  for (NodeId b : h.boundary()) labels[b] = Label::negative(--k);
  return h.with_labels(std::move(labels));
}

void c2_hemisphere(Triangulation& t, NodeId n_star, SweepTrace& trace) {
  if (!t.has_node(n_star) || !t.is_external_node(n_star)) return;
  PieceTree tree(n_star, labeled_hemisphere(t, n_star));
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    const Disk& k = tree.pieces()[i].disk;
    if (k.triangles().size() < 2) continue;
    auto inner = k.interior_nodes();
    if (std::none_of(inner.begin(), inner.end(), [&](NodeId x) { return is_c2(t, x); }))
      continue;
    SplittingPath core = find_splitting_path(k);
    std::vector<NodeId> path = core;
    const Label& head = k.labels().at(core.front());
    const Label& tail = k.labels().at(core.back());
    NodeId front_tip = 0;
    if (!head.is_negative()) {
      front_tip = tree.tip(t, i, core.front(), head.word(), 0);
      path.insert(path.begin(), front_tip);
    }
    if (!tail.is_negative()) path.push_back(tree.tip(t, i, core.back(), tail.word(), front_tip));
    tree.split(t, i, core, path, trace);
    std::size_t n = tree.pieces().size();
    stack.push_back(n - 1);
    stack.push_back(n - 2);
  }
  for (NodeId n : tree.leaf_owners()) trace.frontier.push_back(n);
}

// Shortest path from x through interior nodes of `k` to a boundary node
// other than y. Ties go to the lexicographically smallest sequence.
std::vector<NodeId> second_path(const Disk& k, NodeId x, NodeId y) {
  std::vector<NodeId> best;
  for (NodeId z : k.boundary()) {
    if (z == y) continue;
    auto p = shortest_interior_path(k, x, z, {y});
    if (p.empty()) continue;
    if (best.empty() || p.size() < best.size() || (p.size() == best.size() && p < best))
      best = std::move(p);
  }
  return best;
}

void c1_hemisphere(Triangulation& t, NodeId n_star, SweepTrace& trace) {
  if (!t.has_node(n_star) || !t.is_external_node(n_star)) return;
  Disk h = labeled_hemisphere(t, n_star);
  std::map<NodeId, NodeId> witness;
  for (NodeId x : h.interior_nodes()) {
    if (t.is_external_node(x) || classify_node(t, x).kind != NodeClass::kC1) continue;
    for (NodeId y : h.neighbors(x))
      if (h.is_boundary_node(y)) {
        witness[x] = y;
        break;
      }
  }
  PieceTree tree(n_star, h);
  while (!witness.empty()) {
    auto [x, y] = *witness.begin();
    witness.erase(witness.begin());
    if (is_c0(t, x)) continue;
    Edge xy = make_edge(x, y);
    std::size_t leaf = tree.pieces().size();
    for (std::size_t i = 0; i < tree.pieces().size(); ++i) {
      const auto& p = tree.pieces()[i];
      if (p.leaf && p.disk.has_edge(xy) && !p.disk.is_boundary_edge(xy)) leaf = i;
    }
    if (leaf == tree.pieces().size())
      invariant_failure("witness edge " + to_string(xy) + " is in no piece");
    const Disk& k = tree.pieces()[leaf].disk;
    NodeId owner = tree.pieces()[leaf].owner;
    NodeFlower fl = flower(t, owner);

    std::vector<NodeId> core{y};
    std::vector<NodeId> path;
    if (!k.is_boundary_node(x)) {
      auto rest = second_path(k, x, y);
      ensure(!rest.empty(), "no second path from node " + std::to_string(x));
      core.insert(core.end(), rest.begin(), rest.end());
      path = core;
      if (!fl.hemisphere.is_boundary_node(core.back()))
        path.push_back(tree.tip(t, leaf, core.back(), std::nullopt, y));
    } else {
      core.push_back(x);
      path = core;
      path.push_back(tree.tip(t, leaf, x, std::nullopt, y));
    }
    tree.split(t, leaf, core, path, trace);
    if (!is_c0(t, x))
      invariant_failure("split through " + to_string(xy) + " left node " +
                        std::to_string(x) + " unpromoted");
    for (auto it = witness.begin(); it != witness.end();)
      it = is_c0(t, it->first) ? witness.erase(it) : std::next(it);
  }
  for (NodeId n : tree.leaf_owners()) trace.frontier.push_back(n);
}

template <typename Body>
SweepResult sweep(const Triangulation& t, const std::vector<NodeId>& nodes, Body body) {
  SweepResult out{t, {}};
  for (NodeId n : nodes) body(out.result, n, out.trace);
  return out;
}

void append(SweepTrace& into, SweepTrace&& from) {
  into.splits.insert(into.splits.end(), from.splits.begin(), from.splits.end());
  into.moves.insert(into.moves.end(), from.moves.begin(), from.moves.end());
  into.frontier.insert(into.frontier.end(), from.frontier.begin(), from.frontier.end());
  into.edge_disjoint = into.edge_disjoint && from.edge_disjoint;
}

std::vector<NodeId> unique_sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// External neighbors of the given internal nodes.
std::vector<NodeId> hosts(const Triangulation& t, const std::vector<NodeId>& nodes) {
  std::vector<NodeId> out;
  for (NodeId x : nodes)
    for (NodeId n : t.neighbors(x))
      if (t.is_external_node(n)) out.push_back(n);
  return unique_sorted(std::move(out));
}

std::vector<NodeId> depth1_of_class(const Triangulation& t, NodeClass c) {
  std::vector<NodeId> out;
  for (const auto& [n, cls] : classify_depth1(t))
    if (cls.kind == c) out.push_back(n);
  return out;
}

// Runs `body` over `nodes`, then over the hosts of any depth-1 node still in
// class `stuck` until none is left.
template <typename Body>
SweepResult sweep_until_clear(const Triangulation& t, const std::vector<NodeId>& nodes,
                              NodeClass stuck, Body body) {
  SweepResult out = sweep(t, nodes, body);
  for (auto left = depth1_of_class(out.result, stuck); !left.empty();
       left = depth1_of_class(out.result, stuck)) {
    SweepResult more = sweep(out.result, hosts(out.result, left), body);
    if (more.trace.splits.empty())
      invariant_failure(std::to_string(left.size()) + " depth-1 nodes stay " +
                        to_string(stuck) + " after a full sweep");
    out.result = more.result;
    append(out.trace, std::move(more.trace));
  }
  return out;
}

struct LevelCount {
  std::map<int, long> a, b, c;
};

LevelCount count_levels(const Triangulation& t, const std::map<NodeId, int>& depth) {
  LevelCount out;
  for (const Edge& e : t.internal_edges()) {
    int d0 = depth.at(e[0]);
    int d1 = depth.at(e[1]);
    if (d0 == d1)
      ++out.b[d0];
    else
      ++out.a[std::min(d0, d1)];
  }
  for (const Face& f : t.internal_faces()) {
    int lo = std::min({depth.at(f[0]), depth.at(f[1]), depth.at(f[2])});
    int hi = std::max({depth.at(f[0]), depth.at(f[1]), depth.at(f[2])});
    if (hi == lo + 1) ++out.c[lo];
  }
  return out;
}

long value_at(const std::map<int, long>& m, int d) {
  auto it = m.find(d);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

SweepResult sweep_c2_to_c1(const Triangulation& t, const std::vector<NodeId>& nodes) {
  return sweep(t, nodes, c2_hemisphere);
}

SweepResult sweep_c1_to_c0(const Triangulation& t, const std::vector<NodeId>& nodes) {
  return sweep(t, nodes, c1_hemisphere);
}

EliminationResult eliminate_internal_nodes(const Triangulation& input,
                                           const ReducerOptions& options) {
  EliminationResult out{input, {}, {}, {}};
  GrowthLedger& ledger = out.ledger;
  ledger.growth_constant = options.growth_constant;
  ledger.size_constant =
      options.size_constant > 0 ? options.size_constant : 4 * options.growth_constant;
  ledger.before = f_vector(input);
  ledger.e_before = ledger.before.e_i;

  std::map<NodeId, int> origin = depth_map(input).depth;
  LevelCount levels = count_levels(input, origin);
  long sum_ab = 0;
  long sum_c = 0;
  for (const auto& [d, v] : levels.a) sum_ab += v;
  for (const auto& [d, v] : levels.b) sum_ab += v;
  for (const auto& [d, v] : levels.c) sum_c += v;
  ledger.sums_hold = sum_ab == ledger.before.e_i && sum_c <= ledger.before.f_i;
  if (!ledger.sums_hold) invariant_failure("level counters do not add up to e and f_i");

  Triangulation& t = out.result;
  std::vector<NodeId> list(t.external_nodes().begin(), t.external_nodes().end());
  const long start_internal = ledger.before.n_i;
  for (int d = 0; f_vector(t).n_i > 0; ++d) {
    if (d > start_internal) invariant_failure("elimination exceeded its round budget");
    LevelCounters level;
    level.depth = d;
    level.a = value_at(levels.a, d);
    level.b = value_at(levels.b, d);
    level.c = value_at(levels.c, d);
    if (d > 0) {
      for (const Edge& e : t.internal_edges()) {
        int lo = std::min(origin.at(e[0]), origin.at(e[1]));
        int hi = std::max(origin.at(e[0]), origin.at(e[1]));
        if (lo == d - 1 && hi == d) ++level.a_hat_prev;
      }
      if (level.a_hat_prev > value_at(levels.a, d - 1) + 16 * value_at(levels.c, d - 1))
        ledger.a_hat_bound_holds = false;
    }
    const long internal_before = f_vector(t).n_i;
    const long e0 = f_vector(t).e_i;

    auto inherit = [&](const SweepTrace& trace) {
      for (const auto& s : trace.splits) {
        int depth = origin.at(s.owner);
        origin[s.left] = depth;
        origin[s.right] = depth;
      }
    };

    SweepResult c2 = sweep_until_clear(t, list, NodeClass::kC2, c2_hemisphere);
    inherit(c2.trace);
    t = c2.result;
    const long e1 = f_vector(t).e_i;
    SweepResult c1 =
        sweep_until_clear(t, unique_sorted(c2.trace.frontier), NodeClass::kC1, c1_hemisphere);
    inherit(c1.trace);
    t = c1.result;
    const long e2 = f_vector(t).e_i;
    level.delta_c2 = e1 - e0;
    level.delta_c1 = e2 - e1;
    level.splits_c2 = static_cast<int>(c2.trace.splits.size());
    level.splits_c1 = static_cast<int>(c1.trace.splits.size());
    for (const SweepTrace* trace : {&c2.trace, &c1.trace}) {
      ledger.edge_disjoint = ledger.edge_disjoint && trace->edge_disjoint;
      for (const auto& s : trace->splits) {
        ledger.degree_identity = ledger.degree_identity && s.degree_identity();
        ledger.max_extension = std::max(
            ledger.max_extension, static_cast<int>(s.path.size()) - static_cast<int>(s.core.size()));
        out.splits.push_back(s);
      }
      out.log.insert(out.log.end(), trace->moves.begin(), trace->moves.end());
    }

    std::vector<NodeId> surfaced;
    for (const auto& [x, cls] : classify_depth1(t)) {
      if (t.is_external_node(x)) continue;
      auto now = classify_node(t, x);
      if (now.kind != NodeClass::kC0)
        invariant_failure("depth-1 node " + std::to_string(x) + " is " + to_string(now.kind) +
                          " after both sweeps");
      MoveResult m = remove_1_tetra(t, *now.removable);
      t = m.result;
      out.log.push_back(m.record);
      surfaced.push_back(x);
      ++level.removals;
      if (f_vector(t).n_i == 0) break;
    }
    level.removed = f_vector(t).e_i - e2;
    if (f_vector(t).n_i >= internal_before)
      invariant_failure("round " + std::to_string(d) + " removed no internal node");
    ledger.delta += level.delta_c2 + level.delta_c1;
    ledger.levels.push_back(level);
    list = std::move(surfaced);
  }

  ledger.after = f_vector(t);
  ledger.e_after = ledger.after.e_i;
  const long scale = ledger.before.t + ledger.before.n_i;
  ledger.ratio = static_cast<double>(ledger.delta) / static_cast<double>(scale);
  ledger.growth_bound_holds = ledger.delta <= ledger.growth_constant * scale;
  ledger.size_bound_holds = ledger.after.t <= ledger.size_constant * ledger.before.t &&
                            ledger.after.f_s <= ledger.size_constant * ledger.before.t;
  return out;
}

}  // namespace nuclei
