#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigdef/signed_graph.hpp"

namespace sigdef {

/// Vertex of the flattened graph. Pair p owns nodes 2p (side a) and 2p+1
/// (side b), so the partner of x is x ^ 1.
using Node = std::uint32_t;

constexpr Node partner(Node x) { return x ^ 1u; }
constexpr std::size_t pair_of(Node x) { return x >> 1; }
constexpr Node side_a(std::size_t pair) { return static_cast<Node>(2 * pair); }
constexpr Node side_b(std::size_t pair) { return static_cast<Node>(2 * pair + 1); }

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One entry of the MaxDef step log. Vertex names are the labels of the
/// original vertex each node was created from.
struct TraceEvent {
  int step = 0;
  std::string action;
  std::size_t pairs_removed = 0;
  std::vector<std::string> cover_added;
  std::vector<std::string> forbidden_added;
  /// Identified groups, survivor first.
  std::vector<std::vector<std::string>> merges;
};

/// Working state of MaxDef: a positive perfect matching on the live nodes
/// with all other edges negative, the partial stable cover S, the forbidden
/// set B and the recovery sets R.
///
/// Negative adjacency lists are sorted and may contain the node itself
/// (a negative loop). Negative edges between partners are never stored. B only
/// ever holds live nodes; deleting a pair purges both of its nodes. R maps
/// every node to the original vertices it stands for; identification moves
/// the absorbed node's set into the survivor, and nodes leaving the graph keep
/// their set so S can be expanded at the end.
class MatchedState {
 public:
  MatchedState() = default;

  /// `pairs` matched pairs without negative edges, named a1, b1, a2, ...,
  /// each node standing for the original vertex with the same id.
  explicit MatchedState(std::size_t pairs);

  /// Nodes 2p, 2p+1 form pair p. `names` and `recovery` are indexed by node.
  MatchedState(std::vector<std::string> names, std::vector<VertexSet> recovery);

  std::size_t pair_slots() const { return pair_alive_.size(); }
  std::size_t node_slots() const { return neg_.size(); }
  std::size_t live_pairs() const { return live_pairs_; }
  bool empty() const { return live_pairs_ == 0; }
  bool pair_alive(std::size_t p) const { return pair_alive_.at(p); }
  bool alive(Node x) const { return pair_alive_.at(pair_of(x)) && !absorbed_.at(x); }
  std::vector<Node> live_nodes() const;

  std::span<const Node> negative_neighbors(Node x) const { return neg_.at(x); }
  bool adjacent(Node x, Node y) const;
  bool has_loop(Node x) const { return adjacent(x, x); }
  /// Matching edge plus negative incidences (a loop counts once).
  std::size_t degree(Node x) const { return alive(x) ? 1 + neg_[x].size() : 0; }

  bool forbidden(Node x) const { return forbidden_.at(x); }
  /// Live forbidden nodes, ascending.
  std::vector<Node> forbidden_nodes() const;
  /// Nodes placed in S, in order of placement.
  const std::vector<Node> &cover() const { return cover_; }

  std::span<const VertexId> recovery(Node x) const { return recovery_.at(x); }
  const std::string &name(Node x) const { return names_.at(x); }

  /// Adds a negative edge (x == y gives a loop). An edge between partners is
  /// ignored since exactly one of them ends up in any cover.
  void add_negative_edge(Node x, Node y);
  void remove_negative_edge(Node x, Node y);
  void forbid(Node x);

  /// S ∪ {x} → S, B ∪ N₋(x) → B, then deletes x's pair. Returns the nodes
  /// newly forbidden that are still live afterwards.
  std::vector<Node> place_in_cover(Node x);

  /// Removes both nodes of pair p with all their edges, purging them from B.
  void delete_pair(std::size_t p);

  /// Identifies `gone` into `keep`: edges are redirected (an edge between
  /// the two becomes a loop), duplicates merge, and R(gone) moves into
  /// R(keep). The caller retires the absorbed pair once both sides are merged.
  void identify(Node keep, Node gone);

  /// Marks pair p dead after both of its nodes were absorbed.
  void retire_absorbed_pair(std::size_t p);

  const std::vector<TraceEvent> &trace() const { return trace_; }
  void record(TraceEvent event) { trace_.push_back(std::move(event)); }

  /// Structural checks: symmetric sorted adjacency over live nodes only, no
  /// partner edges, S ∩ B = ∅, B ⊆ live, and R partitions the original
  /// vertex set with a nonempty set on every live node. Throws
  /// InvariantViolation.
  void check_invariants() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Node>> neg_;
  std::vector<VertexSet> recovery_;
  std::vector<bool> pair_alive_;
  std::vector<bool> absorbed_;
  std::vector<bool> forbidden_;
  std::vector<bool> in_cover_;
  std::vector<Node> cover_;
  std::vector<TraceEvent> trace_;
  VertexSet universe_;
  std::size_t live_pairs_ = 0;
};

}  // namespace sigdef
