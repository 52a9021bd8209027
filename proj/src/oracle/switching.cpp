#include "sigdef/switching.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sigdef {

namespace {

std::vector<VertexId> colored(const Coloration &kappa, Color c) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < kappa.size(); ++v)
    if (kappa[v] == c) out.push_back(v);
  return out;
}

// Moves the top absolute value k onto the freed value `freed`, sign kept.
std::vector<Color> relabel_top(std::vector<Color> colors, int top, int freed) {
  if (top == freed) return colors;
  for (Color &c : colors) {
    if (c == top) c = freed;
    else if (c == -top) c = -freed;
  }
  return colors;
}

VertexSet symmetric_difference(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<Coloration> shrink_palette(const SignedGraph &g, const Coloration &kappa,
                                         Color missing) {
  if (missing == 0 || std::abs(missing) > kappa.scale()) return std::nullopt;
  const int k = kappa.scale();
  const int freed = std::abs(missing);
  std::vector<Color> colors(kappa.colors().begin(), kappa.colors().end());
  if (std::find(colors.begin(), colors.end(), missing) != colors.end()) return std::nullopt;

  auto opposite = colored(kappa, -missing);
  std::optional<Coloration> out;
  if (opposite.empty()) {
    out = Coloration(relabel_top(std::move(colors), k, freed), k - 1, kappa.uses_zero());
  } else if (!kappa.uses_zero()) {
    if (!is_stable(g, opposite)) return std::nullopt;
    for (VertexId v : opposite) colors[v] = 0;
    out = Coloration(relabel_top(std::move(colors), k, freed), k - 1, true);
  } else {
    if (opposite.size() != 1) return std::nullopt;
    const VertexId w = opposite.front();
    for (VertexId v = 0; v < colors.size(); ++v) {
      if (colors[v] != 0) continue;
      colors[v] = g.has_edge(v, w, Sign::positive) ? missing : -missing;
    }
    out = Coloration(std::move(colors), k, false);
  }
  if (!is_proper(g, *out)) return std::nullopt;
  return out;
}

SwitchedColoration achieve_switching_deficiency(const SignedGraph &g, const Coloration &kappa,
                                                int target) {
  if (target < 0 || target > kappa.scale())
    throw SwitchingError("target deficiency " + std::to_string(target) + " outside [0, " +
                         std::to_string(kappa.scale()) + "]");
  if (!is_proper(g, kappa)) throw SwitchingError("coloration is not proper");

  auto verify = [&](SwitchedColoration out) {
    if (!is_proper(switch_graph(g, out.switched), out.coloration) ||
        deficiency(out.coloration).count != target)
      throw SwitchingError("could not reach deficiency " + std::to_string(target));
    return out;
  };

  if (target == kappa.scale() && target > 0) {
    VertexSet negatives;
    for (VertexId v = 0; v < kappa.size(); ++v)
      if (kappa[v] < 0) negatives.push_back(v);
    auto switched = switch_coloration(kappa, negatives);
    // Every nonzero absolute value is used by a minimal colouring, so after
    // the switch exactly the negative colours are missing.
    auto def = deficiency(switched);
    for (Color c : def.missing) {
      if (c > 0) {
        auto smaller = shrink_palette(g, kappa, c);
        if (smaller) throw NotMinimal("colour magnitude " + std::to_string(c) + " unused", *smaller);
      }
    }
    return verify({std::move(negatives), std::move(switched)});
  }

  // Reach deficiency 0: each missing colour c has at least two vertices
  // coloured −c when κ is minimal; switching one of them brings c into use.
  VertexSet normalise;
  for (Color c : deficiency(kappa).missing) {
    auto opposite = colored(kappa, -c);
    if (opposite.size() < 2) {
      if (auto smaller = shrink_palette(g, kappa, c))
        throw NotMinimal("colour " + std::to_string(c) + " missing and " + std::to_string(-c) +
                             " used on " + std::to_string(opposite.size()) + " vertices",
                         *smaller);
      throw SwitchingError("colour " + std::to_string(c) +
                           " cannot be brought into use by switching");
    }
    normalise.push_back(opposite.front());
  }
  std::sort(normalise.begin(), normalise.end());
  auto base = switch_coloration(kappa, normalise);

  VertexSet dial;
  for (VertexId v = 0; v < base.size(); ++v)
    if (base[v] >= 1 && base[v] <= target) dial.push_back(v);

  VertexSet total = symmetric_difference(normalise, dial);
  auto result = switch_coloration(kappa, total);
  return verify({std::move(total), std::move(result)});
}

}  // namespace sigdef
