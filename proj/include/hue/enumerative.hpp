#pragma once

#include <string>
#include <vector>

#include "hue/arith.hpp"
#include "hue/complex.hpp"
#include "hue/hypergraph.hpp"
#include "hue/polynomial.hpp"

namespace hue {

// f-vector of a numerical polynomial: the unique integers with
//   p(k) = sum_{i=0}^{n} f_i binom(k-1, i),
// stored as values = (f_{-1}, f_0, ..., f_n) with the conventional leading
// f_{-1} = 1. Raising n appends zeros, so the entries are n-stable.
struct PolyFVector {
  int n = 0;
  std::vector<Int> values;

  Int at(long i) const;  // f_i with zero padding; at(-1) is values[0]
};

// h-vector of a numerical polynomial at normalization n':
//   p(k) = binom(k+n', n') + sum_{i=1}^{n'+1} h_i binom(k+n'-i, n'),
// stored as values = (h_0 = 1, h_1, ..., h_{n'+1}). Unlike the f-vector the
// entries change with n', so the normalization is carried explicitly.
struct PolyHVector {
  int n_prime = 0;
  std::vector<Int> values;
};

PolyFVector poly_f_vector(const Poly& p, int n);
Poly poly_from_f_vector(const PolyFVector& f);

// Triangular solve of the defining identity at k = 1..n'+1; throws if p does
// not admit the representation (degree above n' or non-integer values).
PolyHVector poly_h_vector(const Poly& p, int n_prime);
Poly poly_from_h_vector(const PolyHVector& h);

// Direct alternating-sum transform
//   h_i = sum_{k=-1}^{i-1} (-1)^{i-k-1} binom(n'-k, i-k-1) f_k,
// an independent route to the same entries as poly_h_vector.
PolyHVector h_from_poly_f(const PolyFVector& f, int n_prime);

// Closed form for the h-vector entry h^{n'}_i of the chain complex of the
// Boolean lattice on d atoms:
//   (-1)^i binom(n'+1, i)
//   + sum_{a=0}^{i-1} sum_{b=0}^{a} (-1)^{i-a+b-1} binom(n'-a, i-a-1) binom(a, b) (a-b+2)^d.
Int cube_h_entry(long d, long n_prime, long i);

enum class ChromaticMethod { brute, faces, inclusion_exclusion };

ChromaticMethod chromatic_method_from_name(const std::string& name);
std::string chromatic_method_name(ChromaticMethod method);

// Chromatic polynomial of H in k, by one of three independent routes:
//  - brute: color-by-color backtracking counts for k = 0..n, interpolated,
//    with the value at n+1 kept as a consistency point;
//  - faces: f_i(chi(k+1)) = T(n,i) - f_i(box complex), box built geometrically;
//  - inclusion_exclusion: f_i(chi(k+1)) = sum_a (-1)^a sum_b s[a][b] T(b,i).
// All routes return a monic integer polynomial of degree n.
Poly chromatic_polynomial(const Hypergraph& H, ChromaticMethod method,
                          std::size_t budget = kDefaultBuildBudget);

// Bonferroni truncation at level m of the inclusion-exclusion expression for
// f_i(chi(k+1)): even m gives an upper bound, odd m a lower bound; the value
// is exact at m = #E and whenever i >= n - min_edge_card + 2.
struct TruncationBound {
  int i = 0;
  int m = 0;
  Int value;
  bool upper_bound = false;
  bool exact = false;
};

TruncationBound truncated_bound(const Hypergraph& H, const STable& st, int i, int m);

// Lattice-point counting for the complement-of-colorings region: L(k) counts
// the points of the box-complex union in {0..k}^n, which a unimodular
// triangulation turns into the complex f-vector identity
//   L(k) = sum_{i>=0} f_i binom(k-1, i).
// The rational generating series is sum_k L(k) z^k = (sum h_i z^i)/(1-z)^{D+1}
// with D = dim(box) and h the h-vector of L at normalization D. Passing a
// larger normalization n' moves to the (1-z)^{n'+1} form of the same series;
// n' = n-1 recovers the classical graph normalization, which coincides with
// the default exactly when every edge has two vertices.
struct EhrhartSeries {
  Poly counting;               // L(k)
  PolyFVector f;               // complex f-vector of the box, as a PolyFVector
  PolyHVector numerator;       // h-vector at the chosen normalization
  int denominator_exponent;    // normalization + 1
  bool complement_identity;    // (k+1)^n == chi(k+1) + L(k), chi supplied by caller
  std::vector<bool> term_ok;   // per-coefficient agreement for k = 0..terms
  bool termwise_ok;            // conjunction of term_ok
};

// Verifies the counting identity term by term for k = 0..terms (terms must be
// at least n+2 so the polynomial identity is pinned, not just sampled);
// normalization < 0 selects the box dimension.
EhrhartSeries ehrhart_series_check(const Hypergraph& H, const Poly& chi, long terms,
                                   int normalization = -1,
                                   std::size_t budget = kDefaultBuildBudget);

}  // namespace hue
