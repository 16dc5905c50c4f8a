// Acceptance harness: one line per criterion, exit 0 only if all pass.
// Spot checks pin the worked examples; corpus checks sweep the seeded
// 200-member random family from corpus.hpp.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hue/arith.hpp"
#include "hue/complex.hpp"
#include "hue/enumerative.hpp"
#include "hue/hypergraph.hpp"
#include "hue/topology.hpp"
#include "hue/wedge.hpp"

using namespace hue;

namespace {

int g_failures = 0;

template <typename Fn>
void criterion(int id, const char* label, double limit_secs, Fn body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    note = body();
    pass = true;
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (pass && limit_secs > 0 && secs > limit_secs) {
    pass = false;
    note = "time limit " + std::to_string(limit_secs) + "s exceeded";
  }
  if (!pass) ++g_failures;
  std::printf("criterion %2d [%s] %7.2fs  %s%s%s\n", id, pass ? "PASS" : "FAIL", secs, label,
              note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::vector<Int> ints(const std::vector<long>& v) {
  std::vector<Int> out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

// (k+1)^d in the power basis.
Poly shifted_power(int d) {
  Poly p;
  for (int j = 0; j <= d; ++j) p.c.push_back(Rat(binomial(d, j)));
  return p;
}

// Checks a sample input file against the in-library construction, when the
// sample directory is available.
void cross_pin(const std::string& name, const Hypergraph& expect) {
  const char* dir = std::getenv("HUE_DATA");
  if (!dir) return;
  std::ifstream in(std::string(dir) + "/" + name);
  require(in.good(), "cannot open sample input " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  Hypergraph got = parse_hypergraph(buf.str()).H;
  require(got == expect, "sample input " + name + " drifted from the generator");
}

const std::vector<Hypergraph>& corpus() { return hue::testing::corpus(); }

// Chromatic polynomials for the corpus, one inclusion-exclusion run each,
// shared by the criteria that only need some correct chi.
const std::vector<Poly>& corpus_chis() {
  static const std::vector<Poly> chis = [] {
    std::vector<Poly> out;
    out.reserve(corpus().size());
    for (const Hypergraph& H : corpus())
      out.push_back(chromatic_polynomial(H, ChromaticMethod::inclusion_exclusion));
    return out;
  }();
  return chis;
}

SimplicialComplex& torus_complex() {
  static SimplicialComplex K = build_coloring_complex(generate_family("torus9", {}));
  return K;
}

std::string check_1() {
  Hypergraph H = generate_family("paper_6_nonpart", {});
  cross_pin("nonpart6.json", H);
  SimplicialComplex K = build_coloring_complex(H);
  FHVectorOfComplex fh = f_h_vectors_of_complex(K);
  require(fh.h == ints({1, 33, 39, -1}), "h of the coloring complex is off");
  FHVectorOfComplex box = f_h_vectors_of_complex(box_complex(H));
  require(box.h == ints({1, 33, 39, -1, 0, 0}), "h of the box complex is off");
  return "h=(1,33,39,-1), box h appends (0,0)";
}

std::string check_2() {
  struct Case {
    int d;  // the subspace complex is a copy of the cube triangulation C^d
    std::vector<long> h4;
  };
  // Edges {1,2,3}, {1..5}, {1..6} on six vertices leave cubes of dimension
  // n - #F + 1 = 4, 2, 1.
  const std::vector<Case> cases = {
      {4, {1, 11, 11, 1, 0, 0}}, {2, {1, -1, -1, 1, 0, 0}}, {1, {1, -3, 3, -1, 0, 0}}};
  for (const Case& c : cases) {
    PolyHVector via_transform = poly_h_vector(shifted_power(c.d), 4);
    require(via_transform.values == ints(c.h4), "transform h^4 mismatch at d=" + std::to_string(c.d));
    for (int i = 0; i <= 5; ++i)
      require(cube_h_entry(c.d, 4, i) == via_transform.values[static_cast<std::size_t>(i)],
              "closed form disagrees with the transform at d=" + std::to_string(c.d));
  }
  return "h^4 of the three subspace cubes, closed form == transform";
}

std::string check_3() {
  cross_pin("torus9.json", generate_family("torus9", {}));
  const SimplicialComplex& K = torus_complex();
  Homology q = rational_homology(K);
  require(q.betti == std::vector<long>({0, 2, 28, 9}), "rational betti numbers are off");
  Homology z = integral_homology(K);
  require(z.betti == std::vector<long>({0, 2, 28, 9}), "integral free ranks are off");
  std::string torsion = "torsion:";
  bool any = false;
  for (std::size_t d = 0; d < z.torsion.size(); ++d)
    for (const Int& t : z.torsion[d]) {
      torsion += " d" + std::to_string(d) + "=" + t.get_str();
      any = true;
    }
  if (!any) torsion += " none";
  return "reduced betti (0,2,28,9) over Q and Z; " + torsion;
}

std::string check_4() {
  CupAnalysis c = cup_product_analysis(torus_complex());
  require(c.product_found, "no non-coboundary product found");
  require(!c.wedge_of_spheres, "wedge flag not cleared");
  require(c.witness.has_value(), "missing witness");
  require(c.witness->p >= 1 && c.witness->q >= 1, "witness degrees are not positive");
  return "H^" + std::to_string(c.witness->p) + " x H^" + std::to_string(c.witness->q) +
         " product survives on a face " + c.witness->face;
}

std::string check_5() {
  for (int n = 4; n <= 6; ++n) {
    SimplicialComplex K = build_coloring_complex(generate_family("single_edge", {n, 2}));
    require(Int(K.facet_list().size()) == factorial(n - 1),
            "facet count != (n-1)! at n=" + std::to_string(n));
    Homology h = integral_homology(K);
    for (int d = 0; d <= K.dim(); ++d) {
      require(h.betti[static_cast<std::size_t>(d)] == (d == n - 3 ? 1 : 0),
              "not a sphere at n=" + std::to_string(n));
      require(h.torsion[static_cast<std::size_t>(d)].empty(), "unexpected torsion");
    }
    require(reisner_cm_check(K).verdict == "CM-over-Q", "sphere not CM");
    for (const Int& hi : f_h_vectors_of_complex(K).h)
      require(hi >= 0, "negative h entry on a sphere");
  }
  cross_pin("single_edge_4_2.json", generate_family("single_edge", {4, 2}));
  return "single_edge(n,2), n=4..6: (n-1)! facets, S^{n-3}, CM, h >= 0";
}

std::string check_6() {
  Hypergraph H = generate_family("paper_6_noncm", {});
  cross_pin("noncm6.json", H);
  SimplicialComplex K = build_coloring_complex(H);
  CMReport r = reisner_cm_check(K);
  require(r.verdict == "not-CM", "verdict is " + r.verdict);
  require(r.witness_face.has_value() && *r.witness_face == "123|456",
          "unexpected witness face");
  require(r.witness_degree.has_value() && *r.witness_degree == 0, "witness degree != 0");
  require(r.witness_betti.has_value() && *r.witness_betti == 1, "witness betti != 1");
  return "not-CM with witness 123|456, link b~_0 = 1";
}

std::string check_7() {
  int members = 0;
  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    const Hypergraph& H = corpus()[idx];
    Poly brute = chromatic_polynomial(H, ChromaticMethod::brute);
    Poly faces = chromatic_polynomial(H, ChromaticMethod::faces);
    const Poly& incl = corpus_chis()[idx];
    require(brute == faces && faces == incl,
            "methods disagree on member " + std::to_string(idx));
    require(brute.eval(Rat(0)) == 0, "chi(0) != 0");
    require(brute.eval(Rat(1)) == 0, "chi(1) != 0");
    ++members;
  }
  return std::to_string(members) + " members, three routes coefficient-identical";
}

std::string check_8() {
  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    const Hypergraph& H = corpus()[idx];
    STable st = s_table(H);
    PolyFVector exact = poly_f_vector(shift_argument(corpus_chis()[idx], Rat(1)), H.n);
    for (int i = 0; i <= H.n; ++i) {
      const Int truth = exact.at(i);
      for (int m = 0; m <= H.edge_count(); ++m) {
        TruncationBound tb = truncated_bound(H, st, i, m);
        require(tb.upper_bound ? tb.value >= truth : tb.value <= truth,
                "sandwich violated at member " + std::to_string(idx));
        if (m == H.edge_count()) require(tb.value == truth, "no equality at m = #E");
        if (i >= H.n - H.min_edge_card() + 2)
          require(tb.value == cube_face_count(H.n, i), "tail identity violated");
      }
    }
  }
  return "all members, all i and m: even-m above, odd-m below, exact tails";
}

std::string check_9() {
  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    const Hypergraph& H = corpus()[idx];
    PolyFVector base = poly_f_vector(corpus_chis()[idx], H.n);

    for (int drop = 0; drop < H.edge_count(); ++drop) {
      std::vector<std::vector<int>> edges;
      for (int j = 0; j < H.edge_count(); ++j)
        if (j != drop) edges.push_back(mask_vertices(H.edges[static_cast<std::size_t>(j)]));
      Hypergraph weaker = make_hypergraph(H.n, edges).H;
      Poly chi = chromatic_polynomial(weaker, ChromaticMethod::inclusion_exclusion);
      PolyFVector f = poly_f_vector(chi, H.n);
      for (int i = -1; i <= H.n; ++i)
        require(f.at(i) >= base.at(i), "deletion decreased f at member " + std::to_string(idx));
    }

    int shrink = -1;
    for (int j = 0; j < H.edge_count(); ++j)
      if (mask_card(H.edges[static_cast<std::size_t>(j)]) > 2) shrink = j;
    if (shrink < 0) continue;
    std::vector<std::vector<int>> edges;
    for (int j = 0; j < H.edge_count(); ++j) {
      std::vector<int> vs = mask_vertices(H.edges[static_cast<std::size_t>(j)]);
      if (j == shrink) vs.pop_back();  // drop the largest vertex of the edge
      edges.push_back(vs);
    }
    Hypergraph tighter = make_hypergraph(H.n, edges, true).H;
    Poly chi = chromatic_polynomial(tighter, ChromaticMethod::inclusion_exclusion);
    PolyFVector f = poly_f_vector(chi, H.n);
    for (int i = -1; i <= H.n; ++i) {
      require(f.at(i) >= 0, "negative f entry after shrinking");
      require(f.at(i) <= base.at(i), "shrinking increased f at member " + std::to_string(idx));
    }
  }
  return "edge deletion never lowers, edge shrinking never raises any f_i";
}

std::string check_10() {
  WedgeReport ex = wedge_decomposition(generate_family("paper_6_nonpart", {}));
  require(ex.predicted_betti == std::vector<long>({0, 4, 3}), "worked example prediction off");
  require(ex.agree && ex.euler_ok, "worked example cross-validation failed");
  Int euler(0);
  for (std::size_t d = 0; d < ex.direct_betti.size(); ++d)
    euler += (d % 2 == 0 ? 1 : -1) * Int(ex.direct_betti[d]);
  require(euler == -1, "worked example euler characteristic is not -1");

  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    WedgeReport r = wedge_decomposition(corpus()[idx]);
    require(r.agree && r.euler_ok, "corpus member " + std::to_string(idx) + " disagrees");
  }

  WedgeReport torus = wedge_decomposition(generate_family("torus9", {}));
  require(torus.agree && torus.euler_ok, "torus cross-validation failed");
  require(torus.direct_betti == std::vector<long>({0, 2, 28, 9}), "torus betti off");
  return "predictions match direct homology on the corpus, worked example, torus";
}

std::string check_11() {
  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    ConnectednessReport r = connectedness_check(corpus()[idx], true);
    require(r.cross_check_ok, "verdicts split on member " + std::to_string(idx));
  }
  cross_pin("multi_2_2.json", generate_family("multi_component", {2, 2}));
  for (const std::vector<int>& sizes :
       {std::vector<int>{2, 2}, std::vector<int>{2, 2, 2}, std::vector<int>{3, 2}}) {
    ConnectednessReport r = connectedness_check(generate_family("multi_component", sizes), true);
    const int m = static_cast<int>(sizes.size());
    require(r.predicted_components == m, "predicted component count != m");
    require(r.betti0.has_value() && *r.betti0 == m - 1, "homology component count != m");
    require(r.cross_check_ok, "multi_component cross-check failed");
  }
  return "compatibility verdict == homology verdict; multi_component gives m parts";
}

std::string check_12() {
  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    const Hypergraph& H = corpus()[idx];
    EhrhartSeries s = ehrhart_series_check(H, corpus_chis()[idx], H.n + 5);
    require(s.complement_identity, "complement identity failed at " + std::to_string(idx));
    require(s.termwise_ok, "series terms drift at member " + std::to_string(idx));
    if (H.min_edge_card() == 2) {
      EhrhartSeries g = ehrhart_series_check(H, corpus_chis()[idx], H.n + 5, H.n - 1);
      require(g.termwise_ok, "graph normalization fails at member " + std::to_string(idx));
      require(g.denominator_exponent == H.n, "graph normalization exponent is off");
    }
  }
  return "series identity at K = n+5 terms; graph normalization where m_min = 2";
}

}  // namespace

int main() {
  criterion(1, "worked-example h-vectors", 10.0, check_1);
  criterion(2, "cube h-vectors by closed form and transform", 0.0, check_2);
  criterion(3, "torus homology over Q and Z", 600.0, check_3);
  criterion(4, "torus cup-product witness", 0.0, check_4);
  criterion(5, "single-edge spheres", 0.0, check_5);
  criterion(6, "non-CM witness", 0.0, check_6);
  criterion(7, "chromatic method agreement on the corpus", 300.0, check_7);
  criterion(8, "bonferroni sandwich on the corpus", 0.0, check_8);
  criterion(9, "monotonicity under deletion and shrinking", 0.0, check_9);
  criterion(10, "wedge predictions equal direct homology", 0.0, check_10);
  criterion(11, "connectedness verdicts", 0.0, check_11);
  criterion(12, "series identity", 0.0, check_12);
  std::printf("acceptance: %d/12 passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
