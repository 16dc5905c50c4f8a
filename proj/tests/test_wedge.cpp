#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "hue/wedge.hpp"
#include "oracles.hpp"

using namespace hue;

TEST_CASE("intersection poset of the non-partitionable example") {
  IntersectionPoset P = intersection_poset(generate_family("paper_6_nonpart", {}));
  REQUIRE(P.elements.size() == 7);
  REQUIRE(P.top_index >= 0);

  int singles = 0, pairs = 0;
  for (const PosetElement& e : P.elements) {
    if (e.sphere_dim == 2) {
      ++singles;
      CHECK(e.below.empty());
      CHECK(e.block_count == 4);
    } else if (e.sphere_dim == 0) {
      ++pairs;
      CHECK(e.below.size() == 2);
      CHECK(e.block_count == 2);
    }
  }
  CHECK(singles == 3);
  CHECK(pairs == 3);

  const PosetElement& top = P.elements[static_cast<std::size_t>(P.top_index)];
  CHECK(top.sphere_dim == -1);
  CHECK(top.block_count == 1);
  CHECK(top.below.size() == 6);
  CHECK(top.pattern == std::vector<Mask>({full_mask(6)}));
}

TEST_CASE("wedge prediction for the non-partitionable example") {
  WedgeReport r = wedge_decomposition(generate_family("paper_6_nonpart", {}));
  CHECK(r.predicted_betti == std::vector<long>({0, 4, 3}));
  CHECK(r.direct_betti == std::vector<long>({0, 4, 3}));
  CHECK(!r.predicted_minus_one);
  CHECK(!r.direct_minus_one);
  CHECK(r.agree);
  CHECK(r.euler_ok);

  // The top's lower interval is the hexagon poset of three single edges under
  // three pairwise merges, so it carries one circle.
  for (const WedgeSummand& s : r.summands) {
    if (s.element != r.poset.top_index) continue;
    CHECK(s.sphere_dim == -1);
    CHECK(!s.interval_empty);
    CHECK(s.interval_betti == std::vector<long>({0, 1}));
    CHECK(s.interval_euler == -1);
  }
}

TEST_CASE("one full edge gives the empty-face sphere") {
  WedgeReport r = wedge_decomposition(make_hypergraph(3, {{1, 2, 3}}).H);
  REQUIRE(r.poset.elements.size() == 1);
  CHECK(r.poset.elements[0].sphere_dim == -1);
  REQUIRE(r.summands.size() == 1);
  CHECK(r.summands[0].interval_empty);
  CHECK(r.predicted_minus_one);
  CHECK(r.direct_minus_one);
  CHECK(r.predicted_betti.empty());
  CHECK(r.agree);
  CHECK(r.euler_ok);
}

TEST_CASE("distinct subsets with one merge pattern are pooled") {
  // All four subsets of size >= 2 of a triangle merge to the same block.
  IntersectionPoset P = intersection_poset(make_hypergraph(4, {{1, 2}, {1, 3}, {2, 3}}).H);
  REQUIRE(P.elements.size() == 4);
  const PosetElement& top = P.elements[static_cast<std::size_t>(P.top_index)];
  CHECK(top.pattern == std::vector<Mask>({mask_from_vertices({1, 2, 3}, 4)}));
  CHECK(top.sphere_dim == 0);
  CHECK(top.representative == EdgeSet(3));  // first pair in counter order
  CHECK(top.below.size() == 3);
  for (const PosetElement& e : P.elements)
    if (&e != &top) CHECK(e.sphere_dim == 1);

  WedgeReport r = wedge_decomposition(make_hypergraph(4, {{1, 2}, {1, 3}, {2, 3}}).H);
  CHECK(r.agree);
  CHECK(r.euler_ok);
}

TEST_CASE("separated components add up") {
  WedgeReport r = wedge_decomposition(generate_family("multi_component", {2, 2}));
  CHECK(r.agree);
  CHECK(r.euler_ok);
  REQUIRE(!r.direct_betti.empty());
  CHECK(r.direct_betti[0] == 1);  // two components
}

TEST_CASE("prediction matches direct homology across the corpus") {
  int checked = 0;
  for (const Hypergraph& H : hue::testing::make_corpus(30)) {
    WedgeReport r = wedge_decomposition(H);
    CHECK(r.agree);
    CHECK(r.euler_ok);
    CHECK(r.predicted_betti == r.direct_betti);
    CHECK(r.predicted_minus_one == r.direct_minus_one);
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("interval euler numbers match their betti alternation") {
  WedgeReport r = wedge_decomposition(generate_family("paper_6_nonpart", {}));
  for (const WedgeSummand& s : r.summands) {
    Int alt(0);
    for (std::size_t d = 0; d < s.interval_betti.size(); ++d)
      alt += (d % 2 == 0 ? 1 : -1) * Int(s.interval_betti[d]);
    if (s.interval_empty) alt -= 1;
    CHECK(s.interval_euler == alt);
  }
}

TEST_CASE("edge count cap") {
  std::vector<std::vector<int>> triples;
  for (int a = 1; a <= 7 && static_cast<int>(triples.size()) < 21; ++a)
    for (int b = a + 1; b <= 7 && static_cast<int>(triples.size()) < 21; ++b)
      for (int c = b + 1; c <= 7 && static_cast<int>(triples.size()) < 21; ++c)
        triples.push_back({a, b, c});
  Hypergraph big = make_hypergraph(7, triples).H;
  CHECK(big.edges.size() == 21);
  CHECK_THROWS_AS(wedge_decomposition(big), ValidationError);
  CHECK_THROWS_AS(intersection_poset(big), ValidationError);
}

TEST_CASE("wedge budget is enforced") {
  CHECK_THROWS_AS(wedge_decomposition(generate_family("paper_6_nonpart", {}), 2),
                  BudgetExceeded);
}

TEST_CASE("edgeless input is rejected") {
  CHECK_THROWS_AS(wedge_decomposition(make_hypergraph(4, {}).H), ValidationError);
}
