#pragma once

#include <optional>
#include <stdexcept>

#include "sigdef/coloration.hpp"
#include "sigdef/signed_graph.hpp"

namespace sigdef {

class SwitchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the input colouring turns out not to be minimal. Carries a
/// proper colouring of the same graph on a smaller canonical palette.
class NotMinimal : public SwitchingError {
 public:
  NotMinimal(const std::string &what, Coloration smaller)
      : SwitchingError(what), smaller_(std::move(smaller)) {}
  const Coloration &smaller() const { return smaller_; }

 private:
  Coloration smaller_;
};

struct SwitchedColoration {
  /// Switching set applied to the input graph.
  VertexSet switched;
  /// Proper on switch_graph(g, switched).
  Coloration coloration;
};

/// Palette reduction for a colour c missing from κ. Returns a proper
/// colouring on a smaller canonical palette, or nullopt when the reduction
/// does not apply.
///
/// - −c unused too: drop ±c and relabel ±k to ±|c|.
/// - Even palette, −c class stable: recolour it 0, relabel ±k to ±|c|.
/// - Odd palette, −c on a single vertex w: each 0-coloured vertex becomes c
///   if positively adjacent to w and −c otherwise, freeing colour 0. With
///   opposite-sign parallel edges this can fail, and nullopt is returned.
///
/// A minimal κ never admits a reduction.
std::optional<Coloration> shrink_palette(const SignedGraph &g, const Coloration &kappa,
                                         Color missing);

/// Switches g and a minimal colouring κ to reach deficiency exactly `target`,
/// for 0 ≤ target ≤ κ.scale() (= ⌊χ/2⌋ for minimal κ).
///
/// target = scale: switch every negatively coloured vertex.
/// Otherwise: for each missing colour c switch one vertex coloured −c to reach
/// deficiency 0, then switch every vertex coloured 1..target.
///
/// Throws SwitchingError for an out-of-range target or an improper κ, and
/// NotMinimal when κ is detectably not minimal.
SwitchedColoration achieve_switching_deficiency(const SignedGraph &g, const Coloration &kappa,
                                                int target);

}  // namespace sigdef
