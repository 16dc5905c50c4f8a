#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hue/complex.hpp"
#include "hue/elim.hpp"
#include "hue/hypergraph.hpp"

namespace hue {

// Boundary map of the reduced chain complex over Z. For d = 0 this is the
// augmentation row (one row, all ones); for d > dim it has no columns.
// Columns follow faces[d], rows faces[d-1]; the entry for dropping the j-th
// vertex of a face is (-1)^j.
SparseMatrix boundary_matrix(const SimplicialComplex& K, int d);

// delta_p as a matrix (transpose of boundary_matrix(K, p+1)): rows are
// (p+1)-faces, columns are p-faces.
SparseMatrix coboundary_matrix(const SimplicialComplex& K, int p);

struct Homology {
  bool empty_complex = false;  // the {empty face} complex; its only reduced
                               // homology sits in degree -1 with rank 1
  std::vector<long> betti;     // reduced Betti numbers, degrees 0..dim
  std::vector<std::vector<Int>> torsion;  // degree d -> invariant factors > 1
  bool integral = false;
  Int euler_reduced;           // sum_{d>=0} (-1)^d f_d  -  1
};

Homology rational_homology(const SimplicialComplex& K);
Homology integral_homology(const SimplicialComplex& K);

// delta_p applied to a p-cochain (indices over faces[p]).
SparseVec apply_coboundary(const SimplicialComplex& K, int p, const SparseVec& alpha);

// Front-face/back-face cochain product: (a cup b)(v_0..v_{p+q}) =
// a(v_0..v_p) * b(v_p..v_{p+q}). No sign; the vertex order is fixed by the
// complex, and index tuples list chains in nesting order.
SparseVec cup_cochain(const SimplicialComplex& K, int p, const SparseVec& alpha, int q,
                      const SparseVec& beta);

enum class CoefficientRing { rational, integral };

struct CupWitness {
  int p = 0;
  int q = 0;
  int gen_p = 0;  // positions in the degree-p / degree-q generator lists
  int gen_q = 0;
  std::string face;  // partition string of a face where the product cochain is nonzero
};

struct CupAnalysis {
  std::vector<long> cohomology_rank;  // reduced free ranks, degrees 0..dim
  bool product_found = false;
  std::optional<CupWitness> witness;
  bool wedge_of_spheres = true;  // false once a nontrivial product shows up
  long pairs_checked = 0;
  CoefficientRing ring = CoefficientRing::rational;
};

// Scans products of cohomology generators by total degree, then by the
// smaller factor degree, and stops at the first class that is not a
// coboundary. A wedge of spheres has trivial products, so a witness refutes
// that shape; absence of one is reported as consistency, not proof.
CupAnalysis cup_product_analysis(const SimplicialComplex& K,
                                 CoefficientRing ring = CoefficientRing::rational,
                                 std::size_t budget = kDefaultBuildBudget);

struct ConnectednessReport {
  std::vector<std::vector<int>> compat_components;  // edge indices
  int compat_count = 0;
  // Predicted number of connected components of the coloring complex. A
  // compatibility class with two or more edges stays connected; a lone edge
  // contributes its own sphere, which has two components when its dimension
  // is 0 (edge size n-1) and none when it is empty (edge size n).
  int predicted_components = 0;
  bool plain_rule_applies = false;  // every edge size <= n-2: prediction == compat_count
  std::optional<bool> empty_complex;
  std::optional<long> betti0;
  bool cross_check_ok = true;
};

ConnectednessReport connectedness_check(const Hypergraph& H, bool with_homology,
                                        std::size_t budget = kDefaultBuildBudget);

inline constexpr std::size_t kDefaultLinkBudget = 5'000'000;

struct CMReport {
  std::string verdict;  // "CM-over-Q" | "not-CM" | "budget-exceeded"
  bool pure = true;
  std::optional<std::string> witness_face;  // partition string
  std::optional<int> witness_degree;        // degree with nonzero link homology
  std::optional<long> witness_betti;
  std::size_t links_checked = 0;
};

// Reisner criterion over Q: every link (the empty face included, checked
// last) must have vanishing reduced homology below its own dimension. The
// budget caps the total number of link faces enumerated.
CMReport reisner_cm_check(const SimplicialComplex& K, std::size_t budget = kDefaultLinkBudget);

}  // namespace hue
