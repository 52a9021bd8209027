#include "sigdef/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace sigdef::oracle {

namespace {

void require_at_most(const SignedGraph &g, std::size_t bound, const char *what) {
  if (g.vertex_count() > bound)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the exhaustive bound of " + std::to_string(bound));
}

// Backtracking over colourings in canonical order. Colourings related by a
// signed permutation of the nonzero colours are equivalent, and the first one
// in enumeration order always introduces absolute values 1, 2, 3, ... in
// increasing order with a positive sign, so only those branches are explored.
// `exact_used`, when nonnegative, keeps only colourings with exactly that many
// distinct colours.
class ColoringSearch {
 public:
  ColoringSearch(const SignedGraph &g, int palette_size, int exact_used)
      : palette_(canonical_palette(palette_size)),
        scale_(palette_size / 2),
        exact_used_(exact_used),
        n_(g.vertex_count()),
        earlier_pos_(n_),
        earlier_neg_(n_),
        colors_(n_, 0),
        use_count_(static_cast<std::size_t>(2 * scale_ + 1), 0) {
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId u : g.positive_neighbors(v))
        if (u < v) earlier_pos_[v].push_back(u);
      for (VertexId u : g.negative_neighbors(v))
        if (u < v) earlier_neg_[v].push_back(u);
    }
  }

  std::optional<std::vector<Color>> run() {
    if (dfs(0, 0)) return colors_;
    return std::nullopt;
  }

 private:
  bool allowed(VertexId v, Color c) const {
    for (VertexId u : earlier_pos_[v])
      if (colors_[u] == c) return false;
    for (VertexId u : earlier_neg_[v])
      if (colors_[u] == -c) return false;
    return true;
  }

  int &uses(Color c) { return use_count_[static_cast<std::size_t>(c + scale_)]; }

  bool dfs(VertexId v, int max_abs) {
    if (v == n_) return exact_used_ < 0 || distinct_ == exact_used_;
    if (exact_used_ >= 0 && distinct_ + static_cast<int>(n_ - v) < exact_used_) return false;
    for (Color c : palette_) {
      int a = std::abs(c);
      if (a > max_abs + 1 || (a == max_abs + 1 && c < 0)) continue;
      if (!allowed(v, c)) continue;
      bool fresh = uses(c) == 0;
      if (fresh && exact_used_ >= 0 && distinct_ == exact_used_) continue;
      colors_[v] = c;
      ++uses(c);
      if (fresh) ++distinct_;
      if (dfs(v + 1, std::max(max_abs, a))) return true;
      --uses(c);
      if (fresh) --distinct_;
    }
    return false;
  }

  std::vector<Color> palette_;
  int scale_;
  int exact_used_;
  std::size_t n_;
  std::vector<std::vector<VertexId>> earlier_pos_;
  std::vector<std::vector<VertexId>> earlier_neg_;
  std::vector<Color> colors_;
  std::vector<int> use_count_;
  int distinct_ = 0;
};

VertexSet mask_to_set(std::uint64_t mask, std::span<const VertexId> ids) {
  VertexSet out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (mask >> i & 1) out.push_back(ids[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Preorder over sorted subsets yields them in lexicographic order, so the
// first covering set reached is the lexicographically least one. Unstable
// prefixes are pruned since supersets stay unstable.
class SubsetCoverSearch {
 public:
  explicit SubsetCoverSearch(const SignedGraph &g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId u : g.positive_neighbors(v)) adj_[v] |= std::uint64_t{1} << u;
      for (VertexId u : g.negative_neighbors(v)) adj_[v] |= std::uint64_t{1} << u;
    }
    for (const Edge &e : g.edges())
      if (e.sign == Sign::positive) positive_.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
  }

  std::optional<std::uint64_t> run() {
    if (dfs(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool covers(std::uint64_t set) const {
    return std::all_of(positive_.begin(), positive_.end(),
                       [set](std::uint64_t e) { return (e & set) != 0; });
  }

  bool dfs(std::uint64_t set, std::size_t next) {
    if (covers(set)) {
      found_ = set;
      return true;
    }
    for (std::size_t w = next; w < n_; ++w) {
      if (adj_[w] & set) continue;
      if (dfs(set | std::uint64_t{1} << w, w + 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> positive_;
  std::uint64_t found_ = 0;
};

// One endpoint of every positive edge, for graphs whose positive edges form a
// matching. Endpoints are relabelled 0..2p-1 (pair i -> 2i, 2i+1) for masks.
class PairCoverSearch {
 public:
  explicit PairCoverSearch(const SignedGraph &g) {
    std::vector<int> slot(g.vertex_count(), -1);
    for (const Edge &e : g.edges()) {
      if (e.sign != Sign::positive) continue;
      slot[e.u] = static_cast<int>(ids_.size());
      ids_.push_back(e.u);
      slot[e.v] = static_cast<int>(ids_.size());
      ids_.push_back(e.v);
    }
    adj_.assign(ids_.size(), 0);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      // Opposite-sign parallel edge between the two ends of a pair makes no
      // difference: exactly one end is chosen.
      for (VertexId u : g.negative_neighbors(ids_[i]))
        if (slot[u] >= 0) adj_[i] |= std::uint64_t{1} << slot[u];
    }
  }

  std::size_t pairs() const { return ids_.size() / 2; }

  std::optional<VertexSet> run() {
    if (dfs(0, 0)) return mask_to_set(found_, ids_);
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t pair, std::uint64_t set) {
    if (pair == pairs()) {
      found_ = set;
      return true;
    }
    std::size_t first = 2 * pair;
    std::size_t second = first + 1;
    if (ids_[second] < ids_[first]) std::swap(first, second);
    for (std::size_t side : {first, second}) {
      if ((adj_[side] & set) || (adj_[side] >> side & 1)) continue;
      if (dfs(pair + 1, set | std::uint64_t{1} << side)) return true;
    }
    return false;
  }

  std::vector<VertexId> ids_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t found_ = 0;
};

bool positive_edges_form_matching(const SignedGraph &g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.positive_neighbors(v).size() > 1) return false;
  return true;
}

}  // namespace

std::optional<Coloration> find_proper_coloration(const SignedGraph &g, int palette_size) {
  auto colors = ColoringSearch(g, palette_size, -1).run();
  if (!colors) return std::nullopt;
  return Coloration::with_palette(std::move(*colors), palette_size);
}

int chromatic_number(const SignedGraph &g, const Limits &limits) {
  require_at_most(g, limits.max_vertices, "chromatic number");
  if (g.vertex_count() == 0) return 0;
  // Distinct absolute values on every vertex is always proper, so this ends
  // by palette size 2|V| - 1.
  for (int size = 1;; ++size) {
    if (find_proper_coloration(g, size)) return size;
  }
}

DeficiencyReport deficiency_report(const SignedGraph &g, const Limits &limits) {
  DeficiencyReport rep;
  rep.chi = chromatic_number(g, limits);
  const int n = static_cast<int>(g.vertex_count());
  if (n == 0) {
    rep.range = {0};
    rep.witnesses.emplace(0, Coloration());
    return rep;
  }
  for (int used = std::min(rep.chi, n); used >= 1; --used) {
    auto colors = ColoringSearch(g, rep.chi, used).run();
    if (!colors) continue;
    int def = rep.chi - used;
    rep.range.push_back(def);
    rep.witnesses.emplace(def, Coloration::with_palette(std::move(*colors), rep.chi));
  }
  rep.min = rep.range.front();
  rep.max = rep.range.back();
  return rep;
}

std::optional<VertexSet> stable_positive_cover(const SignedGraph &g, const Limits &limits) {
  if (g.vertex_count() <= std::min<std::size_t>(limits.max_vertices, 64)) {
    auto mask = SubsetCoverSearch(g).run();
    if (!mask) return std::nullopt;
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    return mask_to_set(*mask, all);
  }
  if (!positive_edges_form_matching(g))
    throw BoundExceeded("stable cover: " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the subset bound and positive edges are not a matching");
  PairCoverSearch search(g);
  if (search.pairs() > std::min<std::size_t>(limits.max_pairs, 32))
    throw BoundExceeded("stable cover: " + std::to_string(search.pairs()) +
                        " matched pairs exceeds the bound of " + std::to_string(limits.max_pairs));
  return search.run();
}

int max_deficiency_3chromatic(const SignedGraph &g, const Limits &limits) {
  int chi = chromatic_number(g, limits);
  if (chi != 3) throw NotThreeChromatic(chi);
  return stable_positive_cover(g, limits) ? 1 : 0;
}

SwitchingReport switching_report(const SignedGraph &g, const Limits &limits) {
  require_at_most(g, limits.max_switching_vertices, "switching range");
  SwitchingReport rep;
  const std::size_t n = g.vertex_count();
  // Switching A and V \ A give the same graph, so the last vertex is never switched.
  const std::uint64_t count = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
  bool first = true;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    VertexSet set;
    for (VertexId v = 0; v < n; ++v)
      if (mask >> v & 1) set.push_back(v);
    auto sub = deficiency_report(switch_graph(g, set), limits);
    if (first) {
      rep.chi = sub.chi;
      first = false;
    } else if (sub.chi != rep.chi) {
      throw std::logic_error("chromatic number changed under switching");
    }
    for (auto &[def, kappa] : sub.witnesses)
      rep.witnesses.try_emplace(def, SwitchingWitness{set, kappa});
  }
  for (const auto &[def, w] : rep.witnesses) rep.range.push_back(def);
  return rep;
}

}  // namespace sigdef::oracle
