#include "sigdef/io/generate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sigdef::io {

namespace {

void check_probability(double p, const char *name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

std::vector<std::string> matched_labels(std::size_t pairs) {
  std::vector<std::string> labels;
  labels.reserve(2 * pairs);
  for (std::size_t i = 1; i <= pairs; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  return labels;
}

}  // namespace

double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t Random::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % span;
}

SignedGraph generate_matched(std::size_t pairs, double neg_prob, std::uint64_t seed) {
  if (pairs < 1) throw std::invalid_argument("need at least one pair");
  check_probability(neg_prob, "neg_prob");
  Random rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs; ++i) {
    edges.push_back({static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * i + 1), Sign::positive});
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    for (std::size_t j = i + 1; j < pairs; ++j) {
      for (std::size_t si = 0; si < 2; ++si) {
        for (std::size_t sj = 0; sj < 2; ++sj) {
          if (rng.bernoulli(neg_prob))
            edges.push_back({static_cast<VertexId>(2 * i + si), static_cast<VertexId>(2 * j + sj),
                             Sign::negative});
        }
      }
    }
  }
  return SignedGraph(matched_labels(pairs), edges);
}

SignedGraph matched_graph(std::size_t pairs, std::span<const NamedEdge> negative_edges) {
  std::vector<NamedEdge> edges;
  for (std::size_t i = 1; i <= pairs; ++i)
    edges.push_back({"a" + std::to_string(i), "b" + std::to_string(i), Sign::positive});
  auto labels = matched_labels(pairs);
  for (const auto &e : negative_edges) {
    if (e.sign != Sign::negative) throw std::invalid_argument("override edges must be negative");
    edges.push_back(e);
  }
  auto g = build_graph(edges, labels);
  if (g.vertex_count() != labels.size())
    throw std::invalid_argument("override edge uses a label outside a1..an, b1..bn");
  return g;
}

SignedGraph generate_general(std::size_t vertices, double pos_prob, double neg_prob,
                             std::uint64_t seed) {
  check_probability(pos_prob, "pos_prob");
  check_probability(neg_prob, "neg_prob");
  Random rng(seed);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < vertices; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < vertices; ++u) {
    for (VertexId v = u + 1; v < vertices; ++v) {
      if (rng.bernoulli(pos_prob)) edges.push_back({u, v, Sign::positive});
      if (rng.bernoulli(neg_prob)) edges.push_back({u, v, Sign::negative});
    }
  }
  return SignedGraph(std::move(labels), edges);
}

}  // namespace sigdef::io
