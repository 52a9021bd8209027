#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sigdef/signed_graph.hpp"

namespace sigdef {

using Color = int;

/// Canonical palette of the given size in enumeration order 0, 1, -1, 2, -2, ...
/// Size 2k gives {±1..±k}; size 2k+1 adds 0.
std::vector<Color> canonical_palette(int size);

/// Vertex colouring together with the colour set it is declared against.
///
/// The declared set is {±1..±k}, plus 0 when `uses_zero`. Deficiency is always
/// measured relative to this set.
class Coloration {
 public:
  Coloration() = default;
  Coloration(std::vector<Color> colors, int scale, bool uses_zero);

  /// Coloration declared against the canonical palette of `palette_size`.
  static Coloration with_palette(std::vector<Color> colors, int palette_size);

  int scale() const { return scale_; }
  bool uses_zero() const { return uses_zero_; }
  int palette_size() const { return 2 * scale_ + (uses_zero_ ? 1 : 0); }
  std::vector<Color> palette() const { return canonical_palette(palette_size()); }

  std::size_t size() const { return colors_.size(); }
  std::span<const Color> colors() const { return colors_; }
  Color operator[](VertexId v) const { return colors_.at(v); }

  bool operator==(const Coloration &) const = default;

 private:
  std::vector<Color> colors_;
  int scale_ = 0;
  bool uses_zero_ = false;
};

struct Deficiency {
  int count = 0;
  /// Unused colours, in palette order.
  std::vector<Color> missing;
};

Deficiency deficiency(const Coloration &kappa);

/// Distinct colours used, in palette order.
std::vector<Color> used_colors(const Coloration &kappa);

/// True iff every positive edge uv has κ(u) ≠ κ(v) and every negative edge has
/// κ(u) ≠ −κ(v). Throws GraphError when κ does not cover the graph.
bool is_proper(const SignedGraph &g, const Coloration &kappa);

/// Negates the colours on `set`.
Coloration switch_coloration(const Coloration &kappa, std::span<const VertexId> set);

class CoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Colours `cover` with 0 and every other vertex with 1 (k = 1, zero in the
/// colour set). Throws CoverError naming the first violating edge when the
/// cover is not stable or misses a positive edge.
Coloration coloration_from_cover(const SignedGraph &g, std::span<const VertexId> cover);

enum class TwoChromaticCase { M1m1, M0m0, M1m0 };

constexpr int max_deficiency(TwoChromaticCase c) { return c == TwoChromaticCase::M0m0 ? 0 : 1; }
constexpr int min_deficiency(TwoChromaticCase c) { return c == TwoChromaticCase::M1m1 ? 1 : 0; }
std::string_view to_string(TwoChromaticCase c);

/// Deficiency class of a 2-chromatic graph, read off from connectivity and the
/// presence of positive edges. The caller guarantees χ = 2.
TwoChromaticCase classify_two_chromatic(const SignedGraph &g);

}  // namespace sigdef
