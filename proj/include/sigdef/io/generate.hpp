#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "sigdef/signed_graph.hpp"

namespace sigdef::io {

/// Uniform double in [0, 1) from a 64-bit draw, identical on every platform.
double unit_interval(std::uint64_t bits);

/// Seeded generator used for every random instance. Draws come straight from
/// mt19937_64 so sequences do not depend on the standard library's
/// distribution implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform() { return unit_interval(next()); }
  bool bernoulli(double p) { return uniform() < p; }
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Matched-pair instance: vertices a1, b1, a2, b2, ... (ids in that order),
/// positive edges a_i b_i, and each cross-pair negative edge present
/// independently with probability `neg_prob`.
SignedGraph generate_matched(std::size_t pairs, double neg_prob, std::uint64_t seed);

/// Matched-pair instance with an explicit negative edge list over the labels
/// a1..an, b1..bn.
SignedGraph matched_graph(std::size_t pairs, std::span<const NamedEdge> negative_edges);

/// Arbitrary signed graph on v0..v{n-1}: every vertex pair independently gets
/// a positive edge with probability `pos_prob` and a negative edge with
/// probability `neg_prob` (both gives an opposite-sign parallel pair).
SignedGraph generate_general(std::size_t vertices, double pos_prob, double neg_prob,
                             std::uint64_t seed);

}  // namespace sigdef::io
