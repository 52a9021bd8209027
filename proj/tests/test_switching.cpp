#include <doctest.h>

#include "sigdef/oracle.hpp"
#include "sigdef/switching.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace sigdef;
using fixtures::N;
using fixtures::P;

namespace {

void check_achieved(const SignedGraph &g, const Coloration &k, int r) {
  auto out = achieve_switching_deficiency(g, k, r);
  CHECK(is_proper(switch_graph(g, out.switched), out.coloration));
  CHECK(deficiency(out.coloration).count == r);
  CHECK(out.coloration == switch_coloration(k, out.switched));
}

}  // namespace

TEST_CASE("target zero on a deficiency-zero colouring switches nothing") {
  Coloration left({1, -1, 0}, 1, true);
  auto out = achieve_switching_deficiency(fixtures::triangle(), left, 0);
  CHECK(out.switched.empty());
  CHECK(out.coloration == left);
}

TEST_CASE("maximum target switches the negatively coloured vertices") {
  auto t = fixtures::triangle();
  auto out = achieve_switching_deficiency(t, Coloration({1, -1, 0}, 1, true), 1);
  CHECK(out.switched == VertexSet{*t.find("v")});
  CHECK(out.coloration == Coloration({1, 1, 0}, 1, true));
  CHECK(deficiency(out.coloration).missing == std::vector<Color>{-1});
}

TEST_CASE("every target on a 4-chromatic graph") {
  auto k4 = build_graph(std::vector<NamedEdge>{
      {"a", "b", P}, {"a", "c", P}, {"a", "d", P}, {"b", "c", P}, {"b", "d", P}, {"c", "d", P}});
  auto rep = oracle::deficiency_report(k4);
  REQUIRE(rep.chi == 4);
  for (int r = 0; r <= 2; ++r) check_achieved(k4, rep.witness_min(), r);
  auto one = achieve_switching_deficiency(k4, rep.witness_min(), 1);
  for (VertexId v : one.switched) CHECK(rep.witness_min()[v] == 1);
}

TEST_CASE("invalid requests are rejected") {
  auto t = fixtures::triangle();
  Coloration left({1, -1, 0}, 1, true);
  CHECK_THROWS_AS(achieve_switching_deficiency(t, left, 2), SwitchingError);
  CHECK_THROWS_AS(achieve_switching_deficiency(t, left, -1), SwitchingError);
  CHECK_THROWS_AS(achieve_switching_deficiency(t, Coloration({1, 1, 0}, 1, true), 0), SwitchingError);
}

TEST_CASE("non-minimal colourings are detected") {
  auto edge = build_graph(std::vector<NamedEdge>{{"x", "y", P}});
  try {
    achieve_switching_deficiency(edge, Coloration({1, -1}, 2, false), 0);
    FAIL("expected NotMinimal");
  } catch (const NotMinimal &e) {
    CHECK(e.smaller().palette_size() == 2);
    CHECK(is_proper(edge, e.smaller()));
  }
}

TEST_CASE("palette reduction cases") {
  auto edge = build_graph(std::vector<NamedEdge>{{"x", "y", P}});

  auto unused = shrink_palette(edge, Coloration({1, -1}, 2, false), 2);
  REQUIRE(unused.has_value());
  CHECK(*unused == Coloration({1, -1}, 1, false));

  auto stable = shrink_palette(edge, Coloration({1, -2}, 2, false), 2);
  REQUIRE(stable.has_value());
  CHECK(*stable == Coloration({1, 0}, 1, true));

  auto odd = build_graph(std::vector<NamedEdge>{{"w", "z", P}});
  auto freed = shrink_palette(odd, Coloration({-2, 0}, 2, true), 2);
  REQUIRE(freed.has_value());
  CHECK(*freed == Coloration({-2, 2}, 2, false));

  CHECK_FALSE(shrink_palette(edge, Coloration({1, -1}, 1, false), 1).has_value());
  CHECK_FALSE(shrink_palette(edge, Coloration({1, -1}, 2, false), 0).has_value());
}

TEST_CASE("palette reduction fails on a digon") {
  // Recolouring the 0 end to match its positive neighbour's opposite clashes
  // with the parallel negative edge.
  CHECK_FALSE(shrink_palette(fixtures::digon(), Coloration({0, -1}, 1, true), 1).has_value());
  auto rep = oracle::deficiency_report(fixtures::digon());
  CHECK_THROWS_AS(achieve_switching_deficiency(fixtures::digon(), rep.witness_min(), 0), SwitchingError);
}

TEST_CASE("every reachable target on small simple graphs") {
  ref::for_each_graph(4, 3, [](const SignedGraph &g) {
    auto rep = oracle::deficiency_report(g);
    for (const auto &[d, k] : rep.witnesses) {
      for (int r = 0; r <= k.scale(); ++r) check_achieved(g, k, r);
    }
  });
}
