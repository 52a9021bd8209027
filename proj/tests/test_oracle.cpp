#include <doctest.h>

#include <algorithm>
#include <set>

#include "sigdef/io/generate.hpp"
#include "sigdef/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace sigdef;
using fixtures::N;
using fixtures::P;

namespace {

std::set<int> as_set(const std::vector<int> &v) { return {v.begin(), v.end()}; }

// Σ⁺ bipartite with some bipartition whose parts are both stable in Σ⁺ and
// one part stable in Σ, by enumerating every two-colouring of the vertices.
bool bipartition_criterion(const SignedGraph &g) {
  const std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool pos_ok = true;
    bool side0_stable = true;
    bool side1_stable = true;
    for (const Edge &e : g.edges()) {
      const bool su = (mask >> e.u) & 1;
      const bool sv = (mask >> e.v) & 1;
      if (e.sign == Sign::positive && su == sv) pos_ok = false;
      if (su == sv) (su ? side1_stable : side0_stable) = false;
    }
    if (pos_ok && (side0_stable || side1_stable)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("chromatic number examples") {
  CHECK(oracle::chromatic_number(fixtures::triangle()) == 3);
  CHECK(oracle::chromatic_number(build_graph(std::vector<NamedEdge>{{"x", "y", N}})) == 2);
  CHECK(oracle::chromatic_number(SignedGraph{}) == 0);
  CHECK(oracle::chromatic_number(build_graph({}, std::vector<std::string>{"solo"})) == 1);
  CHECK(oracle::chromatic_number(fixtures::digon()) == 3);
}

TEST_CASE("the seven-pair fixture is 2-chromatic") {
  // a_i gets s_i and b_i gets -s_i; each negative edge asks for equal
  // colours and the resulting constraints on s are consistent.
  auto g = fixtures::worked_example();
  CHECK(oracle::chromatic_number(g, {.max_vertices = 14}) == 2);
  std::vector<Color> s{1, 1, 1, 1, -1, -1, 1};
  std::vector<Color> c;
  for (Color x : s) {
    c.push_back(x);
    c.push_back(-x);
  }
  CHECK(is_proper(g, Coloration(c, 1, false)));
}

TEST_CASE("deficiency report examples") {
  auto t = oracle::deficiency_report(fixtures::triangle());
  CHECK(t.chi == 3);
  CHECK(t.range == std::vector<int>{0, 1});
  CHECK(t.max == 1);
  CHECK(t.min == 0);
  CHECK(t.witness_min() == Coloration({1, -1, 0}, 1, true));
  CHECK(is_proper(fixtures::triangle(), t.witness_max()));
  CHECK(deficiency(t.witness_max()).count == 1);

  auto edge = oracle::deficiency_report(build_graph(std::vector<NamedEdge>{{"x", "y", P}}));
  CHECK(edge.range == std::vector<int>{0});

  auto path = oracle::deficiency_report(
      build_graph(std::vector<NamedEdge>{{"x", "y", N}, {"y", "z", N}}));
  CHECK(path.chi == 2);
  CHECK(path.range == std::vector<int>{1});
}

TEST_CASE("stable positive cover examples") {
  auto g = fixtures::worked_example();
  auto c = oracle::stable_positive_cover(g);
  REQUIRE(c.has_value());
  CHECK(is_stable(g, *c));
  CHECK(covers_positive(g, *c));
  auto given = resolve_labels(g, fixtures::worked_cover());
  CHECK(is_stable(g, given));
  CHECK(covers_positive(g, given));

  auto pos_triangle =
      build_graph(std::vector<NamedEdge>{{"u", "v", P}, {"v", "w", P}, {"u", "w", P}});
  CHECK_FALSE(oracle::stable_positive_cover(pos_triangle).has_value());

  auto uv = build_graph(std::vector<NamedEdge>{{"u", "v", P}});
  CHECK(oracle::stable_positive_cover(uv) == VertexSet{0});
  CHECK(oracle::stable_positive_cover(SignedGraph{}) == VertexSet{});
}

TEST_CASE("max deficiency of 3-chromatic graphs") {
  CHECK(oracle::max_deficiency_3chromatic(fixtures::triangle()) == 1);
  auto g = build_graph(
      std::vector<NamedEdge>{{"u", "v", P}, {"v", "w", P}, {"u", "w", P}, {"w", "x", N}});
  CHECK(oracle::max_deficiency_3chromatic(g) == 0);
  CHECK(oracle::deficiency_report(g).max == 0);
  try {
    oracle::max_deficiency_3chromatic(fixtures::worked_example(), {.max_vertices = 14});
    FAIL("expected a refusal");
  } catch (const oracle::NotThreeChromatic &e) {
    CHECK(e.chi() == 2);
  }
}

TEST_CASE("bounds are refused, not approximated") {
  auto big = io::generate_general(13, 0.3, 0.3, 4);
  CHECK_THROWS_AS(oracle::chromatic_number(big), oracle::BoundExceeded);
  CHECK_THROWS_AS(oracle::deficiency_report(big), oracle::BoundExceeded);
  CHECK_THROWS_AS(oracle::switching_report(io::generate_general(11, 0.3, 0.3, 4)),
                  oracle::BoundExceeded);
  // Not a matching, too big for subsets.
  CHECK_THROWS_AS(oracle::stable_positive_cover(big), oracle::BoundExceeded);
  CHECK_NOTHROW(oracle::chromatic_number(big, {.max_vertices = 13}));
}

TEST_CASE("pair search on large matched graphs agrees with direct enumeration") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = io::generate_matched(14, 0.08, seed);
    bool expected = false;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << 14) && !expected; ++choice) {
      VertexSet s;
      for (std::size_t p = 0; p < 14; ++p) s.push_back(static_cast<VertexId>(2 * p + ((choice >> p) & 1)));
      expected = is_stable(g, s);
    }
    auto c = oracle::stable_positive_cover(g);
    CHECK(c.has_value() == expected);
    if (c) {
      CHECK(is_stable(g, *c));
      CHECK(covers_positive(g, *c));
    }
  }
}

TEST_CASE("oracle agrees with plain enumeration on every small graph") {
  auto check = [](const SignedGraph &g) {
    auto rep = oracle::deficiency_report(g);
    auto r = ref::deficiency_range(g);
    CHECK(rep.chi == r.chi);
    CHECK(as_set(rep.range) == r.deficiencies);
    for (const auto &[d, k] : rep.witnesses) {
      CHECK(is_proper(g, k));
      CHECK(k.palette_size() == rep.chi);
      CHECK(deficiency(k).count == d);
    }
    auto cover = oracle::stable_positive_cover(g);
    CHECK(cover.has_value() == ref::has_stable_positive_cover(g));
    if (cover) {
      CHECK(is_stable(g, *cover));
      CHECK(covers_positive(g, *cover));
    }
    // Cover existence matches M = 1, and the bipartition criterion holds.
    if (rep.chi == 3) {
      CHECK((rep.max == 1) == cover.has_value());
      CHECK((rep.max == 1) == bipartition_criterion(g));
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) ref::for_each_graph(n, 3, check);
  for (std::size_t n = 2; n <= 3; ++n) ref::for_each_graph(n, 4, check);
}

TEST_CASE("covers are lexicographically least") {
  ref::for_each_graph(4, 3, [](const SignedGraph &g) {
    auto c = oracle::stable_positive_cover(g);
    if (!c) return;
    // Enumerate candidates in lexicographic order of their sorted id lists.
    std::vector<VertexSet> all;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      VertexSet s;
      for (VertexId v = 0; v < 4; ++v)
        if ((mask >> v) & 1) s.push_back(v);
      if (g.vertex_count() == 4 && is_stable(g, s) && covers_positive(g, s)) all.push_back(s);
    }
    CHECK(*c == *std::min_element(all.begin(), all.end()));
  });
}

TEST_CASE("chromatic number is invariant under switching") {
  ref::for_each_graph(4, 3, [](const SignedGraph &g) {
    const int chi = oracle::chromatic_number(g);
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      VertexSet a;
      for (VertexId v = 0; v < 3; ++v)
        if ((mask >> v) & 1) a.push_back(v);
      CHECK(oracle::chromatic_number(switch_graph(g, a)) == chi);
    }
  });
}

TEST_CASE("switching report examples") {
  auto t = oracle::switching_report(fixtures::triangle());
  CHECK(t.chi == 3);
  CHECK(t.range == std::vector<int>{0, 1});
  for (const auto &[d, w] : t.witnesses) {
    auto h = switch_graph(fixtures::triangle(), w.switched);
    CHECK(is_proper(h, w.coloration));
    CHECK(deficiency(w.coloration).count == d);
  }

  auto solo = oracle::switching_report(build_graph({}, std::vector<std::string>{"v"}));
  CHECK(solo.chi == 1);
  CHECK(solo.range == std::vector<int>{0});

  auto neg = oracle::switching_report(build_graph(std::vector<NamedEdge>{{"x", "y", N}}));
  CHECK(neg.range == std::vector<int>{0, 1});
}

TEST_CASE("a digon has switching range {1}") {
  // Switching maps the digon to itself, and its only minimal colourings put
  // 0 on one end and ±1 on the other.
  auto rep = oracle::switching_report(fixtures::digon());
  CHECK(rep.chi == 3);
  CHECK(rep.range == std::vector<int>{1});
}
