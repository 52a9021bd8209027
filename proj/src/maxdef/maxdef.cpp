#include "sigdef/maxdef.hpp"

#include <algorithm>

#include "sigdef/oracle.hpp"

namespace sigdef {

namespace {

std::string pair_name(const MatchedState &st, std::size_t p) {
  return "(" + st.name(side_a(p)) + "," + st.name(side_b(p)) + ")";
}

std::vector<std::string> names_of(const MatchedState &st, std::span<const Node> nodes) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (Node x : nodes) out.push_back(st.name(x));
  return out;
}

// S ∪ {x} → S, B ∪ N₋(x) → B, delete x's pair, and log it.
void place_and_record(MatchedState &st, Node x, int step, std::string action) {
  std::string name = st.name(x);
  auto added = st.place_in_cover(x);
  st.record({step, std::move(action), 1, {name}, names_of(st, added), {}});
}

struct Flattened {
  std::variant<MatchedState, NotBipartite> outcome;
  std::vector<TraceEvent> trace;
};

Flattened flatten_with_trace(const SignedGraph &g) {
  if (g.positive_edge_count() == 0) throw NoPositiveEdge();
  const std::size_t n = g.vertex_count();
  std::vector<TraceEvent> trace;

  std::size_t dropped = 0;
  for (VertexId v = 0; v < n; ++v)
    if (g.positive_neighbors(v).empty()) ++dropped;
  trace.push_back({1, "deleted " + std::to_string(dropped) + " vertices without positive edges",
                   0, {}, {}, {}});

  constexpr int unseen = -1;
  std::vector<int> node_of(n, unseen);
  std::vector<int> color(n, unseen);
  std::vector<std::string> names;
  std::vector<VertexSet> recovery;
  std::vector<std::vector<std::string>> collapsed;

  for (VertexId s = 0; s < n; ++s) {
    if (g.positive_neighbors(s).empty() || color[s] != unseen) continue;
    const std::size_t pair = names.size() / 2;
    VertexSet parts[2];
    std::vector<VertexId> stack{s};
    color[s] = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      parts[color[v]].push_back(v);
      for (VertexId u : g.positive_neighbors(v)) {
        if (color[u] == unseen) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          trace.push_back({2, "positive component of " + g.label(s) + " is not bipartite",
                           0, {}, {}, {}});
          return {NotBipartite{s}, std::move(trace)};
        }
      }
    }
    for (int side = 0; side < 2; ++side) {
      auto &part = parts[side];
      std::sort(part.begin(), part.end());
      for (VertexId v : part) node_of[v] = static_cast<int>(2 * pair) + side;
      names.push_back(g.label(part.front()));
      if (part.size() > 1) {
        std::vector<std::string> group;
        for (VertexId v : part) group.push_back(g.label(v));
        collapsed.push_back(std::move(group));
      }
      recovery.push_back(std::move(part));
    }
  }

  MatchedState st(std::move(names), std::move(recovery));
  std::size_t loops = 0;
  for (const Edge &e : g.edges()) {
    if (e.sign != Sign::negative || node_of[e.u] == unseen || node_of[e.v] == unseen) continue;
    Node x = static_cast<Node>(node_of[e.u]);
    Node y = static_cast<Node>(node_of[e.v]);
    if (x == y && !st.has_loop(x)) ++loops;
    st.add_negative_edge(x, y);
  }
  trace.push_back({2,
                   "collapsed " + std::to_string(st.pair_slots()) + " bipartite positive components into pairs, " +
                       std::to_string(loops) + " loops",
                   0, {}, {}, std::move(collapsed)});
  for (auto &event : trace) st.record(std::move(event));
  return {std::move(st), {}};
}

}  // namespace

std::variant<MatchedState, NotBipartite> flatten(const SignedGraph &g) {
  return flatten_with_trace(g).outcome;
}

std::optional<std::size_t> step3_check(const MatchedState &st) {
  for (std::size_t p = 0; p < st.pair_slots(); ++p) {
    if (!st.pair_alive(p)) continue;
    Node a = side_a(p);
    Node b = side_b(p);
    bool fa = st.forbidden(a);
    bool fb = st.forbidden(b);
    if ((fa || fb) && (fa || st.has_loop(a)) && (fb || st.has_loop(b))) return p;
  }
  return std::nullopt;
}

bool step4_resolve(MatchedState &st) {
  for (std::size_t p = 0; p < st.pair_slots(); ++p) {
    if (!st.pair_alive(p)) continue;
    for (Node x : {side_a(p), side_b(p)}) {
      if (!st.forbidden(x)) continue;
      place_and_record(st, partner(x), 4, st.name(x) + " is in B, so " + st.name(partner(x)) + " joins S");
      return true;
    }
  }
  return false;
}

std::optional<std::size_t> step5_check(const MatchedState &st) {
  for (std::size_t p = 0; p < st.pair_slots(); ++p) {
    if (st.pair_alive(p) && st.has_loop(side_a(p)) && st.has_loop(side_b(p))) return p;
  }
  return std::nullopt;
}

bool step6_resolve(MatchedState &st) {
  for (std::size_t p = 0; p < st.pair_slots(); ++p) {
    if (!st.pair_alive(p)) continue;
    for (Node x : {side_a(p), side_b(p)}) {
      if (!st.has_loop(x)) continue;
      place_and_record(st, partner(x), 6, st.name(x) + " has a loop, so " + st.name(partner(x)) + " joins S");
      return true;
    }
  }
  return false;
}

bool step7_resolve(MatchedState &st) {
  for (std::size_t p = 0; p < st.pair_slots(); ++p) {
    if (!st.pair_alive(p)) continue;
    for (Node x : {side_a(p), side_b(p)}) {
      for (Node y : st.negative_neighbors(x)) {
        if (y == x || !st.adjacent(x, partner(y))) continue;
        std::string action = st.name(x) + " is adjacent to both sides of pair " +
                             pair_name(st, pair_of(y)) + ", so " + st.name(partner(x)) + " joins S";
        place_and_record(st, partner(x), 7, std::move(action));
        return true;
      }
    }
  }
  return false;
}

bool step8_merge(MatchedState &st) {
  for (std::size_t p = 0; p < st.pair_slots(); ++p) {
    if (!st.pair_alive(p)) continue;
    for (Node x : {side_a(p), side_b(p)}) {
      for (Node y : st.negative_neighbors(x)) {
        if (y == x || !st.adjacent(partner(x), partner(y))) continue;
        const Node xbar = partner(x);
        const Node ybar = partner(y);
        TraceEvent event{8,
                         "identify " + st.name(x) + " with " + st.name(ybar) + " and " + st.name(xbar) +
                             " with " + st.name(y),
                         1,
                         {},
                         {},
                         {{st.name(x), st.name(ybar)}, {st.name(xbar), st.name(y)}}};
        st.identify(x, ybar);
        st.identify(xbar, y);
        st.retire_absorbed_pair(pair_of(y));
        st.remove_negative_edge(x, xbar);
        st.record(std::move(event));
        return true;
      }
    }
  }
  return false;
}

bool step9_pendant(MatchedState &st) {
  for (Node x = 0; x < st.node_slots(); ++x) {
    if (!st.alive(x) || st.forbidden(x) || !st.negative_neighbors(x).empty()) continue;
    place_and_record(st, x, 9, st.name(x) + " has degree one and joins S");
    return true;
  }
  return false;
}

bool ForcingGraph::has_arc(Node x, Node y) const {
  const auto &list = successors.at(x);
  return std::binary_search(list.begin(), list.end(), y);
}

std::size_t ForcingGraph::arc_count() const {
  std::size_t total = 0;
  for (const auto &list : successors) total += list.size();
  return total;
}

std::size_t ForcingGraph::min_outdegree() const {
  std::optional<std::size_t> best;
  for (Node x = 0; x < successors.size(); ++x) {
    if (!live[x]) continue;
    best = std::min(best.value_or(successors[x].size()), successors[x].size());
  }
  return best.value_or(0);
}

bool ForcingGraph::mirror_symmetric() const {
  for (Node x = 0; x < successors.size(); ++x) {
    for (Node y : successors[x])
      if (!has_arc(mirror(y), mirror(x))) return false;
  }
  return true;
}

ForcingGraph build_forcing_graph(const MatchedState &st) {
  ForcingGraph fg;
  fg.successors.resize(st.node_slots());
  fg.live.assign(st.node_slots(), false);
  for (Node x = 0; x < st.node_slots(); ++x) {
    if (!st.alive(x)) continue;
    fg.live[x] = true;
    auto &out = fg.successors[x];
    for (Node z : st.negative_neighbors(x))
      if (z != x) out.push_back(partner(z));
    std::sort(out.begin(), out.end());
  }
  return fg;
}

std::vector<Node> find_cycle(const ForcingGraph &fg) {
  auto start = std::find(fg.live.begin(), fg.live.end(), true);
  if (start == fg.live.end()) throw InvariantViolation("forcing graph has no live node");
  std::vector<int> position(fg.successors.size(), -1);
  std::vector<Node> walk;
  Node x = static_cast<Node>(start - fg.live.begin());
  while (position[x] < 0) {
    position[x] = static_cast<int>(walk.size());
    walk.push_back(x);
    if (fg.successors[x].empty())
      throw InvariantViolation("forcing graph node without successor");
    x = fg.successors[x].front();
  }
  return {walk.begin() + position[x], walk.end()};
}

ContractOutcome step12_contract(MatchedState &st, const ForcingGraph &fg) {
  const auto cycle = find_cycle(fg);
  std::vector<bool> on_cycle(st.node_slots(), false);
  for (Node z : cycle) on_cycle[z] = true;
  std::vector<std::string> cycle_names = names_of(st, cycle);
  for (Node z : cycle) {
    if (!on_cycle[partner(z)]) continue;
    st.record({12, "cycle contains both " + st.name(z) + " and " + st.name(partner(z)), 0, {}, {},
               {cycle_names}});
    return ContractOutcome::zero;
  }

  const Node keep = *std::min_element(cycle.begin(), cycle.end(), [](Node a, Node b) {
    return pair_of(a) < pair_of(b);
  });
  const Node keep_bar = partner(keep);
  std::vector<std::string> group{st.name(keep)};
  std::vector<std::string> mirror_group{st.name(keep_bar)};
  for (Node z : cycle) {
    if (z == keep) continue;
    group.push_back(st.name(z));
    mirror_group.push_back(st.name(partner(z)));
  }
  for (Node z : cycle) {
    if (z == keep) continue;
    st.identify(keep, z);
    st.identify(keep_bar, partner(z));
    st.retire_absorbed_pair(pair_of(z));
  }
  st.remove_negative_edge(keep, keep_bar);
  st.record({12, "identified a forcing cycle and its mirror", cycle.size() - 1, {}, {},
             {std::move(group), std::move(mirror_group)}});
  return ContractOutcome::contracted;
}

MaxDefResult maxdef(const SignedGraph &g, const MaxDefOptions &options) {
  if (!options.assume_three_chromatic) {
    if (g.vertex_count() > options.certify_bound)
      throw oracle::BoundExceeded("cannot certify chi = 3 above " + std::to_string(options.certify_bound) +
                                  " vertices; assert it explicitly");
    bool two = oracle::find_proper_coloration(g, 2).has_value();
    if (two || !oracle::find_proper_coloration(g, 3)) {
      oracle::Limits limits;
      limits.max_vertices = options.certify_bound;
      throw oracle::NotThreeChromatic(oracle::chromatic_number(g, limits));
    }
  }

  MaxDefResult result;
  auto finish = [&](const MatchedState *st, int value, int step) {
    result.value = value;
    result.terminating_step = step;
    if (st) result.trace = st->trace();
    return result;
  };

  auto flattened = flatten_with_trace(g);
  if (std::holds_alternative<NotBipartite>(flattened.outcome)) {
    result.trace = std::move(flattened.trace);
    result.value = 0;
    result.terminating_step = 2;
    return result;
  }
  auto &st = std::get<MatchedState>(flattened.outcome);
  if (options.check_invariants) st.check_invariants();

  auto after_action = [&](std::size_t before) {
    if (!options.check_invariants) return;
    st.check_invariants();
    if (st.live_pairs() >= before) throw InvariantViolation("action did not remove a matched pair");
  };

  while (true) {
    const std::size_t before = st.live_pairs();
    if (auto p = step3_check(st)) {
      st.record({3, "both sides of pair " + pair_name(st, *p) + " are excluded", 0, {}, {}, {}});
      return finish(&st, 0, 3);
    }
    if (step4_resolve(st)) {
      after_action(before);
      continue;
    }
    if (auto p = step5_check(st)) {
      st.record({5, "both sides of pair " + pair_name(st, *p) + " have loops", 0, {}, {}, {}});
      return finish(&st, 0, 5);
    }
    if (step6_resolve(st) || step7_resolve(st) || step8_merge(st) || step9_pendant(st)) {
      after_action(before);
      continue;
    }
    if (st.empty()) {
      VertexSet ids;
      for (Node x : st.cover()) {
        auto r = st.recovery(x);
        ids.insert(ids.end(), r.begin(), r.end());
      }
      std::sort(ids.begin(), ids.end());
      st.record({10, "graph is empty; expanding S through R", 0, {}, {}, {}});
      if (!is_stable(g, ids) || !covers_positive(g, ids))
        throw InvariantViolation("MaxDef produced a set that is not a stable positive cover");
      std::vector<std::string> labels;
      for (VertexId v : ids) labels.push_back(g.label(v));
      result.cover = std::move(labels);
      result.cover_ids = std::move(ids);
      return finish(&st, 1, 10);
    }
    auto fg = build_forcing_graph(st);
    st.record({11, "forcing graph with " + std::to_string(fg.arc_count()) + " arcs", 0, {}, {}, {}});
    if (options.check_invariants) {
      if (!fg.mirror_symmetric()) throw InvariantViolation("forcing graph is not mirror symmetric");
      if (fg.min_outdegree() < 1) throw InvariantViolation("forcing graph has a sink");
    }
    if (step12_contract(st, fg) == ContractOutcome::zero) return finish(&st, 0, 12);
    after_action(before);
  }
}

}  // namespace sigdef
