#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "hue/complex.hpp"
#include "hue/face.hpp"
#include "oracles.hpp"

using namespace hue;

namespace {

// The complex's faces as a set of label chains, for order-free comparison.
std::set<std::vector<Mask>> chain_set(const SimplicialComplex& K) {
  std::set<std::vector<Mask>> out;
  for (const auto& per_dim : K.faces)
    for (const auto& face : per_dim) out.insert(K.chain_of(face));
  return out;
}

std::set<std::vector<Mask>> chain_set(const std::vector<std::vector<Mask>>& chains) {
  std::set<std::vector<Mask>> out;
  for (const auto& c : chains)
    if (!c.empty()) out.insert(c);
  return out;
}

}  // namespace

TEST_CASE("coloring complex faces match the direct chain enumeration") {
  auto sample = hue::testing::make_corpus(20);
  sample.push_back(generate_family("paper_6_nonpart", {}));
  sample.push_back(generate_family("paper_6_noncm", {}));
  sample.push_back(make_hypergraph(4, {{1, 2, 3}, {3, 4}}).H);
  for (const Hypergraph& H : sample) {
    if (H.n > 6) continue;  // oracle enumerates every chain of subsets of [n]
    SimplicialComplex K = build_coloring_complex(H);
    CHECK(chain_set(K) == chain_set(oracle::coloring_chains(H)));
  }
}

TEST_CASE("subchains of faces are faces") {
  for (const Hypergraph& H : hue::testing::make_corpus(15)) {
    SimplicialComplex K = build_coloring_complex(H);
    for (const auto& per_dim : K.faces) {
      for (const auto& face : per_dim) {
        if (face.size() < 2) continue;
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
          std::vector<int> sub = face;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          CHECK(K.contains(sub));
        }
      }
    }
  }
}

TEST_CASE("single full edge gives the empty-face complex") {
  Hypergraph H = make_hypergraph(4, {{1, 2, 3, 4}}).H;
  SimplicialComplex K = build_coloring_complex(H);
  CHECK(K.empty_face_only());
  CHECK(K.dim() == -1);
  CHECK(K.f_vector() == std::vector<Int>({Int(1)}));
}

TEST_CASE("single edge facet counts are factorials") {
  for (int n = 4; n <= 6; ++n) {
    Hypergraph H = generate_family("single_edge", {n, 2});
    SimplicialComplex K = build_coloring_complex(H);
    CHECK(K.dim() == n - 3);
    CHECK(K.is_pure());
    CHECK(Int(K.facet_list().size()) == factorial(n - 1));
  }
}

TEST_CASE("facet dimensions and purity") {
  // Pure exactly when the edge cardinalities are uniform; facets of a pure
  // complex all sit in the top dimension n - m_min - 1.
  Hypergraph uniform = generate_family("paper_6_nonpart", {});
  SimplicialComplex KU = build_coloring_complex(uniform);
  CHECK(KU.is_pure());
  CHECK(KU.dim() == 2);
  CHECK(KU.facet_list().size() == 72);

  Hypergraph mixed = make_hypergraph(4, {{1, 2, 3}, {3, 4}}).H;
  SimplicialComplex KM = build_coloring_complex(mixed);
  CHECK(!KM.is_pure());
  CHECK(KM.dim() == 4 - 2 - 1);
}

TEST_CASE("three-edge example h-vector") {
  SimplicialComplex K = build_coloring_complex(generate_family("paper_6_nonpart", {}));
  FHVectorOfComplex fh = f_h_vectors_of_complex(K);
  CHECK(fh.h == std::vector<Int>({Int(1), Int(33), Int(39), Int(-1)}));
}

TEST_CASE("hexagon h-vector") {
  // f = (1, 6, 6) is a 6-cycle; its h-vector is the classic (1, 4, 1).
  CHECK(h_from_f_complex({Int(1), Int(6), Int(6)}) ==
        std::vector<Int>({Int(1), Int(4), Int(1)}));
}

TEST_CASE("edge spheres match the block filter oracle") {
  auto sample = hue::testing::make_corpus(12);
  sample.push_back(generate_family("paper_6_nonpart", {}));
  for (const Hypergraph& H : sample) {
    if (H.n > 6) continue;
    for (int j = 0; j < H.edge_count() && j < 3; ++j) {
      const EdgeSet S = EdgeSet(1) << j;
      const Mask F = H.edges[static_cast<std::size_t>(j)];
      SimplicialComplex Q = edge_sphere_complex(H, S);
      auto expect = oracle::all_chains(H.n, [&](const std::vector<Mask>& chain) {
        if (chain.empty()) return false;
        for (Mask block : oracle::chain_blocks(H.n, chain))
          if (mask_subset(F, block)) return true;
        return false;
      });
      CHECK(chain_set(Q) == chain_set(expect));
      // Q_F is the barycentric subdivision of a (n - #F - 1)-sphere boundary.
      CHECK(Q.dim() == H.n - mask_card(F) - 1);
      CHECK(Q.is_pure());
    }
  }
}

TEST_CASE("edge sphere intersections follow the ambient blocks") {
  Hypergraph H = generate_family("paper_6_nonpart", {});
  // Edges sorted as 123, 156, 345; take S = {123, 345}.
  SimplicialComplex Q = edge_sphere_complex(H, 0b101);
  CHECK(Q.dim() == 0);
  CHECK(Q.faces[0].size() == 2);

  Hypergraph H2 = make_hypergraph(4, {{1, 2, 3}, {1, 2, 4}}).H;
  SimplicialComplex Q2 = edge_sphere_complex(H2, 0b11);
  CHECK(Q2.empty_face_only());

  for (const Hypergraph& G : hue::testing::make_corpus(10)) {
    if (G.n > 6 || G.edge_count() < 2) continue;
    const EdgeSet S = 0b11;
    SimplicialComplex QS = edge_sphere_complex(G, S);
    auto expect = oracle::all_chains(G.n, [&](const std::vector<Mask>& chain) {
      if (chain.empty()) return false;
      for (int j = 0; j < 2; ++j) {
        const Mask F = G.edges[static_cast<std::size_t>(j)];
        bool found = false;
        for (Mask block : oracle::chain_blocks(G.n, chain))
          if (mask_subset(F, block)) found = true;
        if (!found) return false;
      }
      return true;
    });
    CHECK(chain_set(QS) == chain_set(expect));
  }
}

TEST_CASE("cube complex face counts match the chain-count formula") {
  for (int d = 1; d <= 4; ++d) {
    SimplicialComplex C = cube_complex(d);
    std::vector<Int> f = C.f_vector();
    REQUIRE(static_cast<int>(f.size()) == d + 2);
    for (int i = -1; i <= d; ++i)
      CHECK(f[static_cast<std::size_t>(i + 1)] == cube_face_count(d, i));
  }
}

TEST_CASE("subspace complex is a smaller cube") {
  // P_F only sees the quotient where F is one point, so its f-vector is that
  // of the cube on n - #F + 1 coordinates.
  SimplicialComplex P = subspace_complex(4, mask_from_vertices({1, 2}, 4));
  CHECK(P.f_vector() == cube_complex(3).f_vector());
  SimplicialComplex P2 = subspace_complex(5, mask_from_vertices({2, 3, 4}, 5));
  CHECK(P2.f_vector() == cube_complex(3).f_vector());
}

TEST_CASE("box complex of one full edge is a segment") {
  Hypergraph H = make_hypergraph(3, {{1, 2, 3}}).H;
  SimplicialComplex B = box_complex(H);
  CHECK(B.f_vector() == std::vector<Int>({Int(1), Int(2), Int(1)}));
}

TEST_CASE("box face counts agree with the materialized box complex") {
  for (const Hypergraph& H : hue::testing::make_corpus(25)) {
    CHECK(box_face_counts(H) == box_complex(H).f_vector());
  }
}

TEST_CASE("box complex is the double cone over the coloring complex") {
  // h(box) = h(coloring complex) with two zeros appended.
  for (const Hypergraph& H : hue::testing::make_corpus(12)) {
    SimplicialComplex K = build_coloring_complex(H);
    if (K.empty_face_only()) continue;
    std::vector<Int> hk = f_h_vectors_of_complex(K).h;
    std::vector<Int> hb = h_from_f_complex(box_face_counts(H));
    hk.push_back(0);
    hk.push_back(0);
    CHECK(hb == hk);
  }
}

TEST_CASE("vertex order variant builds the same complex") {
  Hypergraph H = generate_family("paper_6_nonpart", {});
  SimplicialComplex A = build_coloring_complex(H, VertexOrder::canonical);
  SimplicialComplex B = build_coloring_complex(H, VertexOrder::alt);
  CHECK(A.f_vector() == B.f_vector());
  CHECK(chain_set(A) == chain_set(B));
}

TEST_CASE("links behave at the extremes") {
  SimplicialComplex K = build_coloring_complex(generate_family("paper_6_nonpart", {}));
  SimplicialComplex L = link_of_face(K, {});
  CHECK(L.f_vector() == K.f_vector());

  const auto facets = K.facet_list();
  SimplicialComplex Lf = link_of_face(K, facets.front());
  CHECK(Lf.empty_face_only());

  CHECK_THROWS_AS(link_of_face(K, std::vector<int>{0, 1, 2, 3}), ValidationError);
}

TEST_CASE("link of a vertex counts the faces above it") {
  for (const Hypergraph& H : hue::testing::make_corpus(8)) {
    SimplicialComplex K = build_coloring_complex(H);
    if (K.empty_face_only()) continue;
    const std::vector<int> v = {0};
    SimplicialComplex L = link_of_face(K, v);
    // Each d-face of the link is a (d+1)-face of K through the vertex.
    std::vector<Int> expect(1, Int(1));
    for (std::size_t d = 1; d < K.faces.size(); ++d) {
      Int count(0);
      for (const auto& face : K.faces[d])
        if (std::find(face.begin(), face.end(), 0) != face.end()) count += 1;
      if (count != 0) expect.push_back(count);
    }
    CHECK(L.f_vector() == expect);
  }
}

TEST_CASE("builders reject malformed chains and gaps") {
  std::vector<std::vector<Mask>> bad = {{mask_from_vertices({1, 2}, 3),
                                         mask_from_vertices({1}, 3)}};
  CHECK_THROWS(complex_from_chains(3, bad, VertexOrder::canonical));
}

TEST_CASE("face partition strings round trip") {
  Face f;
  f.chain = {mask_from_vertices({1, 2, 3}, 6)};
  CHECK(f.partition_string(6) == "123|456");
  Face back = Face::parse_partition("123|456", 6);
  CHECK(back.chain == f.chain);
}

TEST_CASE("build budget is enforced") {
  Hypergraph H = generate_family("torus9", {});
  CHECK_THROWS_AS(build_coloring_complex(H, VertexOrder::canonical, 10), BudgetExceeded);
}
