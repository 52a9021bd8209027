#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sigdef/matched_state.hpp"
#include "sigdef/signed_graph.hpp"

namespace sigdef {

// MaxDef decides whether a 3-chromatic signed graph has maximum deficiency 1,
// i.e. whether some stable vertex set covers every positive edge.
//
// Every "look for an i" search scans pairs in ascending index and within a
// pair side a before side b. Each step function applies at most one action
// and appends its own trace event.

class NoPositiveEdge : public std::invalid_argument {
 public:
  NoPositiveEdge() : std::invalid_argument("graph has no positive edge, so it is not 3-chromatic") {}
};

/// A positive component with an odd cycle; `vertex` lies in it.
struct NotBipartite {
  VertexId vertex;
};

/// Steps 1 and 2: drop vertices without positive edges, two-colour each
/// positive component (side a holds the component's smallest vertex id) and
/// collapse both sides. Components become pairs in order of their smallest
/// vertex. Negative edges inside a side become loops; negative edges across
/// a pair are dropped. Throws NoPositiveEdge.
std::variant<MatchedState, NotBipartite> flatten(const SignedGraph &g);

/// Lowest pair whose sides are both excluded: at least one in B and the other
/// in B or looped (a looped node lies in its own negative neighbourhood).
std::optional<std::size_t> step3_check(const MatchedState &st);

/// Lowest pair with a side in B: the other side goes to S.
bool step4_resolve(MatchedState &st);

/// Lowest pair looped on both sides.
std::optional<std::size_t> step5_check(const MatchedState &st);

/// Lowest pair looped on one side: the other side goes to S.
bool step6_resolve(MatchedState &st);

/// Lowest node x negatively adjacent to both sides of another pair: x̄ goes to S.
bool step7_resolve(MatchedState &st);

/// Lowest pairs i < j with x_i ~ x_j and x̄_i ~ x̄_j: x_i absorbs x̄_j and x̄_i
/// absorbs x_j; pair i survives.
bool step8_merge(MatchedState &st);

/// Lowest node whose only edge is its matching edge goes to S.
bool step9_pendant(MatchedState &st);

/// Digraph on live nodes with x → y whenever x is negatively adjacent to ȳ.
/// Choosing x for the cover forces y.
struct ForcingGraph {
  std::vector<std::vector<Node>> successors;
  std::vector<bool> live;

  static Node mirror(Node x) { return partner(x); }
  bool has_arc(Node x, Node y) const;
  std::size_t arc_count() const;
  /// Minimum outdegree over live nodes (0 when there are none).
  std::size_t min_outdegree() const;
  /// x → y present iff ȳ → x̄ present.
  bool mirror_symmetric() const;
};

ForcingGraph build_forcing_graph(const MatchedState &st);

/// Walks from the lowest live node along lowest successors until a node
/// repeats and returns the repeated suffix, in walk order. Requires minimum
/// outdegree ≥ 1.
std::vector<Node> find_cycle(const ForcingGraph &fg);

enum class ContractOutcome { contracted, zero };

/// Step 12: a cycle C and its mirror C̄. If C meets C̄ the answer is 0;
/// otherwise C and C̄ are each identified into one node (survivors on the
/// lowest pair touched by C).
ContractOutcome step12_contract(MatchedState &st, const ForcingGraph &fg);

struct MaxDefOptions {
  /// Skip the χ = 3 certification.
  bool assume_three_chromatic = false;
  /// Certify χ = 3 with the oracle up to this many vertices; larger graphs
  /// need assume_three_chromatic.
  std::size_t certify_bound = 24;
  /// Check state invariants after every action, forcing-graph properties at
  /// every Step 11 and strict pair-count decrease. Violations throw.
  bool check_invariants = false;
};

struct MaxDefResult {
  int value = 0;
  /// Cover in original labels, ordered by vertex id; present iff value = 1.
  std::optional<std::vector<std::string>> cover;
  VertexSet cover_ids;
  int terminating_step = 0;
  std::vector<TraceEvent> trace;
};

/// Runs Steps 1-12. A value-1 result is always re-checked against the input
/// graph (stable and covering E⁺) and throws InvariantViolation otherwise.
MaxDefResult maxdef(const SignedGraph &g, const MaxDefOptions &options = {});

}  // namespace sigdef
