#pragma once

#include <string>
#include <vector>

#include "sigdef/signed_graph.hpp"

namespace fixtures {

using sigdef::NamedEdge;
using sigdef::Sign;

inline constexpr Sign P = Sign::positive;
inline constexpr Sign N = Sign::negative;

/// u+v, u-w, v-w.
inline sigdef::SignedGraph triangle() {
  return sigdef::build_graph(std::vector<NamedEdge>{{"u", "v", P}, {"u", "w", N}, {"v", "w", N}});
}

/// One positive and one negative edge between the same two vertices.
inline sigdef::SignedGraph digon() {
  return sigdef::build_graph(std::vector<NamedEdge>{{"x", "y", P}, {"x", "y", N}});
}

inline std::vector<NamedEdge> worked_negatives() {
  return {{"a1", "a2", N}, {"b1", "b4", N}, {"a2", "b5", N}, {"b2", "b3", N}, {"b2", "b4", N},
          {"a3", "a4", N}, {"b4", "a5", N}, {"b5", "b6", N}, {"a6", "b7", N}, {"b6", "a7", N}};
}

inline std::vector<std::string> worked_labels() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 7; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  return labels;
}

/// Seven matched pairs a_i b_i with ten negative cross edges.
inline sigdef::SignedGraph worked_example() {
  std::vector<NamedEdge> edges;
  for (int i = 1; i <= 7; ++i) edges.push_back({"a" + std::to_string(i), "b" + std::to_string(i), P});
  for (auto &e : worked_negatives()) edges.push_back(e);
  return sigdef::build_graph(edges, worked_labels());
}

inline std::vector<std::string> worked_cover() { return {"b1", "a2", "b3", "a4", "a5", "a6", "a7"}; }

/// Two positive paths whose middle vertices are negatively adjacent. Each
/// path collapses to a pair with a looped side, and the unlooped sides are
/// adjacent, so no stable positive cover exists. A separate triangle u+v,
/// u-w, v-w makes the whole graph 3-chromatic.
inline sigdef::SignedGraph looped_partners() {
  return sigdef::build_graph(std::vector<NamedEdge>{{"p1", "q1", P},
                                                    {"q1", "r1", P},
                                                    {"p1", "r1", N},
                                                    {"s", "t", P},
                                                    {"t", "u", P},
                                                    {"s", "u", N},
                                                    {"q1", "t", N},
                                                    {"m", "n", P},
                                                    {"m", "o", N},
                                                    {"n", "o", N}});
}

}  // namespace fixtures
