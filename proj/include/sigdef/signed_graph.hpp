#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sigdef {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

enum class Sign : std::int8_t { positive = 1, negative = -1 };

inline constexpr Sign operator-(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

inline constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

struct NamedEdge {
  std::string u;
  std::string v;
  Sign sign;
};

/// Edge between dense ids, normalised so that u < v.
struct Edge {
  VertexId u;
  VertexId v;
  Sign sign;

  bool operator==(const Edge &) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Loop-free signed graph with at most one edge of each sign per vertex pair.
///
/// Vertices carry external string labels and are addressed internally by dense
/// ids in order of first appearance. Positive and negative adjacency are kept
/// in separate sorted lists, so a pair may be joined by both a positive and a
/// negative edge.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Builds from dense ids. Same-sign duplicates collapse; loops and
  /// out-of-range ids throw GraphError.
  SignedGraph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t positive_edge_count() const { return positive_edges_; }
  std::size_t negative_edge_count() const { return negative_edges_; }
  std::size_t edge_count() const { return positive_edges_ + negative_edges_; }

  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(std::string_view label) const;

  std::span<const VertexId> positive_neighbors(VertexId v) const { return pos_.at(v); }
  std::span<const VertexId> negative_neighbors(VertexId v) const { return neg_.at(v); }
  std::span<const VertexId> neighbors(VertexId v, Sign s) const {
    return s == Sign::positive ? positive_neighbors(v) : negative_neighbors(v);
  }

  bool has_edge(VertexId u, VertexId v, Sign s) const;
  bool adjacent(VertexId u, VertexId v) const {
    return has_edge(u, v, Sign::positive) || has_edge(u, v, Sign::negative);
  }

  /// All edges with u < v, ordered by (u, v, positive before negative).
  std::vector<Edge> edges() const;

  bool operator==(const SignedGraph &other) const {
    return labels_ == other.labels_ && pos_ == other.pos_ && neg_ == other.neg_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> pos_;
  std::vector<std::vector<VertexId>> neg_;
  std::size_t positive_edges_ = 0;
  std::size_t negative_edges_ = 0;
};

/// Builds a graph from labelled edges. `vertices` pre-declares labels (in
/// order) so isolated vertices survive and ids are predictable.
SignedGraph build_graph(std::span<const NamedEdge> edges,
                        std::span<const std::string> vertices = {});

/// Resolves labels to a sorted id set; unknown labels throw GraphError.
VertexSet resolve_labels(const SignedGraph &g, std::span<const std::string> labels);

/// Negates every edge with exactly one endpoint in `set`.
SignedGraph switch_graph(const SignedGraph &g, std::span<const VertexId> set);

/// True iff the subgraph induced by `set` has no edge of either sign.
bool is_stable(const SignedGraph &g, std::span<const VertexId> set);

/// True iff every positive edge has an endpoint in `set`.
bool covers_positive(const SignedGraph &g, std::span<const VertexId> set);

bool is_connected(const SignedGraph &g);

/// Component index per vertex (components numbered by smallest member).
std::vector<std::size_t> connected_components(const SignedGraph &g);

/// Membership mask for `set` over the vertices of `g`; throws GraphError on
/// out-of-range ids.
std::vector<bool> membership(const SignedGraph &g, std::span<const VertexId> set);

}  // namespace sigdef
