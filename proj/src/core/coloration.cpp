#include "sigdef/coloration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sigdef {

std::vector<Color> canonical_palette(int size) {
  if (size < 0) throw std::invalid_argument("negative palette size");
  std::vector<Color> out;
  out.reserve(static_cast<std::size_t>(size));
  if (size % 2 == 1) out.push_back(0);
  for (Color c = 1; c <= size / 2; ++c) {
    out.push_back(c);
    out.push_back(-c);
  }
  return out;
}

Coloration::Coloration(std::vector<Color> colors, int scale, bool uses_zero)
    : colors_(std::move(colors)), scale_(scale), uses_zero_(uses_zero) {
  if (scale_ < 0) throw std::invalid_argument("negative colour scale");
  for (Color c : colors_) {
    if (std::abs(c) > scale_)
      throw std::invalid_argument("colour " + std::to_string(c) + " exceeds scale " +
                                  std::to_string(scale_));
    if (c == 0 && !uses_zero_)
      throw std::invalid_argument("colour 0 used but not in the declared colour set");
  }
}

Coloration Coloration::with_palette(std::vector<Color> colors, int palette_size) {
  return Coloration(std::move(colors), palette_size / 2, palette_size % 2 == 1);
}

std::vector<Color> used_colors(const Coloration &kappa) {
  // Index by 2|c| - (c > 0): 0 -> 0, 1 -> 1, -1 -> 2, 2 -> 3, ...
  std::vector<bool> seen(static_cast<std::size_t>(kappa.palette_size()) + 1, false);
  for (Color c : kappa.colors()) {
    std::size_t slot = c == 0 ? 0 : 2 * static_cast<std::size_t>(std::abs(c)) - (c > 0 ? 1 : 0);
    seen[slot] = true;
  }
  std::vector<Color> out;
  for (Color c : kappa.palette()) {
    std::size_t slot = c == 0 ? 0 : 2 * static_cast<std::size_t>(std::abs(c)) - (c > 0 ? 1 : 0);
    if (seen[slot]) out.push_back(c);
  }
  return out;
}

Deficiency deficiency(const Coloration &kappa) {
  auto used = used_colors(kappa);
  Deficiency d;
  for (Color c : kappa.palette()) {
    if (std::find(used.begin(), used.end(), c) == used.end()) d.missing.push_back(c);
  }
  d.count = static_cast<int>(d.missing.size());
  return d;
}

bool is_proper(const SignedGraph &g, const Coloration &kappa) {
  if (kappa.size() != g.vertex_count())
    throw GraphError("coloration size does not match vertex count");
  for (const Edge &e : g.edges()) {
    Color a = kappa[e.u];
    Color b = kappa[e.v];
    if (e.sign == Sign::positive ? a == b : a == -b) return false;
  }
  return true;
}

Coloration switch_coloration(const Coloration &kappa, std::span<const VertexId> set) {
  std::vector<Color> colors(kappa.colors().begin(), kappa.colors().end());
  std::vector<bool> flipped(colors.size(), false);
  for (VertexId v : set) {
    if (v >= colors.size()) throw GraphError("vertex id out of range");
    if (!flipped[v]) colors[v] = -colors[v];
    flipped[v] = true;
  }
  return Coloration(std::move(colors), kappa.scale(), kappa.uses_zero());
}

Coloration coloration_from_cover(const SignedGraph &g, std::span<const VertexId> cover) {
  auto in = membership(g, cover);
  for (const Edge &e : g.edges()) {
    std::string edge = g.label(e.u) + sign_char(e.sign) + g.label(e.v);
    if (in[e.u] && in[e.v]) throw CoverError("cover is not stable: edge " + edge);
    if (e.sign == Sign::positive && !in[e.u] && !in[e.v])
      throw CoverError("positive edge " + edge + " is not covered");
  }
  std::vector<Color> colors(g.vertex_count(), 1);
  for (VertexId v : cover) colors[v] = 0;
  return Coloration(std::move(colors), 1, true);
}

std::string_view to_string(TwoChromaticCase c) {
  switch (c) {
    case TwoChromaticCase::M1m1: return "M1m1";
    case TwoChromaticCase::M0m0: return "M0m0";
    case TwoChromaticCase::M1m0: return "M1m0";
  }
  return "?";
}

TwoChromaticCase classify_two_chromatic(const SignedGraph &g) {
  if (g.positive_edge_count() > 0) return TwoChromaticCase::M0m0;
  return is_connected(g) ? TwoChromaticCase::M1m1 : TwoChromaticCase::M1m0;
}

}  // namespace sigdef
