#include "sigdef/signed_graph.hpp"

#include <algorithm>
#include <numeric>

namespace sigdef {

namespace {

void sort_unique(std::vector<VertexId> &list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace

SignedGraph::SignedGraph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)), pos_(labels_.size()), neg_(labels_.size()) {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!index_.emplace(labels_[v], v).second)
      throw GraphError("duplicate vertex label '" + labels_[v] + "'");
  }
  for (const Edge &e : edges) {
    if (e.u >= labels_.size() || e.v >= labels_.size())
      throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("loop at vertex '" + labels_[e.u] + "'");
    auto &adj = e.sign == Sign::positive ? pos_ : neg_;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto &list : pos_) {
    sort_unique(list);
    positive_edges_ += list.size();
  }
  for (auto &list : neg_) {
    sort_unique(list);
    negative_edges_ += list.size();
  }
  positive_edges_ /= 2;
  negative_edges_ /= 2;
}

std::optional<VertexId> SignedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SignedGraph::has_edge(VertexId u, VertexId v, Sign s) const {
  auto list = neighbors(u, s);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> SignedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    // Merge the two sorted lists so output is ordered by (v, sign).
    auto p = pos_[u].begin();
    auto n = neg_[u].begin();
    while (p != pos_[u].end() || n != neg_[u].end()) {
      bool take_pos = n == neg_[u].end() || (p != pos_[u].end() && *p <= *n);
      VertexId v = take_pos ? *p++ : *n++;
      if (u < v) out.push_back({u, v, take_pos ? Sign::positive : Sign::negative});
    }
  }
  return out;
}

SignedGraph build_graph(std::span<const NamedEdge> edges,
                        std::span<const std::string> vertices) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string &label) {
    auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto &v : vertices) intern(v);

  std::vector<Edge> dense;
  dense.reserve(edges.size());
  for (const auto &e : edges) {
    if (e.u == e.v) throw GraphError("loop edge at vertex '" + e.u + "'");
    VertexId a = intern(e.u);
    VertexId b = intern(e.v);
    dense.push_back({std::min(a, b), std::max(a, b), e.sign});
  }
  return SignedGraph(std::move(labels), dense);
}

VertexSet resolve_labels(const SignedGraph &g, std::span<const std::string> labels) {
  VertexSet out;
  out.reserve(labels.size());
  for (const auto &l : labels) {
    auto id = g.find(l);
    if (!id) throw GraphError("unknown vertex '" + l + "'");
    out.push_back(*id);
  }
  sort_unique(out);
  return out;
}

std::vector<bool> membership(const SignedGraph &g, std::span<const VertexId> set) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : set) {
    if (v >= g.vertex_count()) throw GraphError("vertex id out of range");
    in[v] = true;
  }
  return in;
}

SignedGraph switch_graph(const SignedGraph &g, std::span<const VertexId> set) {
  auto in = membership(g, set);
  std::vector<Edge> edges = g.edges();
  for (Edge &e : edges) {
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  }
  return SignedGraph(g.labels(), edges);
}

bool is_stable(const SignedGraph &g, std::span<const VertexId> set) {
  auto in = membership(g, set);
  for (VertexId v : set) {
    for (VertexId u : g.positive_neighbors(v))
      if (in[u]) return false;
    for (VertexId u : g.negative_neighbors(v))
      if (in[u]) return false;
  }
  return true;
}

bool covers_positive(const SignedGraph &g, std::span<const VertexId> set) {
  auto in = membership(g, set);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (in[u]) continue;
    for (VertexId v : g.positive_neighbors(u))
      if (!in[v]) return false;
  }
  return true;
}

std::vector<std::size_t> connected_components(const SignedGraph &g) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.vertex_count(), unseen);
  std::vector<VertexId> stack;
  std::size_t next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unseen) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Sign sign : {Sign::positive, Sign::negative}) {
        for (VertexId u : g.neighbors(v, sign)) {
          if (comp[u] == unseen) {
            comp[u] = next;
            stack.push_back(u);
          }
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const SignedGraph &g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

}  // namespace sigdef
