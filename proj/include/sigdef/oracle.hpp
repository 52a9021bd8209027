#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigdef/coloration.hpp"
#include "sigdef/signed_graph.hpp"

// Exhaustive ground truth for small graphs. Everything here is brute force on
// purpose and shares no code with the MaxDef implementation.
namespace sigdef::oracle {

struct Limits {
  /// Vertex bound for colouring searches and subset enumeration.
  std::size_t max_vertices = 12;
  /// Vertex bound for enumerating all 2^|V| switchings.
  std::size_t max_switching_vertices = 10;
  /// Pair bound for one-side-per-pair cover enumeration on matched graphs.
  std::size_t max_pairs = 24;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotThreeChromatic : public std::runtime_error {
 public:
  explicit NotThreeChromatic(int chi)
      : std::runtime_error("graph is " + std::to_string(chi) + "-chromatic, not 3-chromatic"),
        chi_(chi) {}
  int chi() const { return chi_; }

 private:
  int chi_;
};

/// First proper colouring over the canonical palette of `palette_size` in
/// enumeration order (vertices ascending, colours 0, 1, -1, 2, -2, ...).
/// No size bound is applied; callers bound the input.
std::optional<Coloration> find_proper_coloration(const SignedGraph &g, int palette_size);

/// Smallest canonical palette admitting a proper colouring; 0 for the empty graph.
int chromatic_number(const SignedGraph &g, const Limits &limits = {});

struct DeficiencyReport {
  int chi = 0;
  /// Achievable deficiencies over minimal colourations, ascending.
  std::vector<int> range;
  int max = 0;
  int min = 0;
  /// One minimal colouring per achievable deficiency.
  std::map<int, Coloration> witnesses;

  const Coloration &witness_max() const { return witnesses.at(max); }
  const Coloration &witness_min() const { return witnesses.at(min); }
};

DeficiencyReport deficiency_report(const SignedGraph &g, const Limits &limits = {});

/// A stable set covering every positive edge, or nullopt if none exists.
///
/// Up to `max_vertices` this is the lexicographically least such set by
/// vertex id (subset enumeration). Larger graphs whose positive edges form a
/// matching are searched one side per pair, lower id first. Anything else
/// throws BoundExceeded.
std::optional<VertexSet> stable_positive_cover(const SignedGraph &g, const Limits &limits = {});

/// 1 iff a stable positive cover exists. Throws NotThreeChromatic when the
/// oracle chromatic number is not 3.
int max_deficiency_3chromatic(const SignedGraph &g, const Limits &limits = {});

struct SwitchingWitness {
  VertexSet switched;
  Coloration coloration;
};

struct SwitchingReport {
  int chi = 0;
  /// Deficiencies achieved by minimal colourings of switchings of g, ascending.
  std::vector<int> range;
  std::map<int, SwitchingWitness> witnesses;
};

SwitchingReport switching_report(const SignedGraph &g, const Limits &limits = {});

}  // namespace sigdef::oracle
