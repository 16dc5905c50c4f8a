#pragma once

#include <optional>
#include <vector>

#include "hue/complex.hpp"
#include "hue/hypergraph.hpp"
#include "hue/topology.hpp"

namespace hue {

inline constexpr int kMaxWedgeEdges = 20;

// One element of the intersection poset: a merge pattern, i.e. the
// non-singleton blocks of the ambient component partition of some edge
// subset S. Distinct subsets with the same pattern give the same sphere, so
// patterns are deduplicated and each keeps its first representative.
struct PosetElement {
  std::vector<Mask> pattern;     // merged blocks, sorted
  EdgeSet representative = 0;    // first S (binary-counter order) with this pattern
  int block_count = 0;           // ambient blocks of ([n], S), singletons included
  int sphere_dim = 0;            // block_count - 2
  std::vector<int> below;        // indices of strictly smaller elements
};

// Ordered by refinement: p <= q when every block of p lies inside a block of
// q, which matches reverse inclusion of the sphere intersections. Single
// edges are the minimal elements; the pattern of the full edge set is the
// top. The order is verified against actual face-set containment of the
// sphere complexes on construction.
struct IntersectionPoset {
  std::vector<PosetElement> elements;  // first-seen order over the subset counter
  int top_index = -1;
};

IntersectionPoset intersection_poset(const Hypergraph& H,
                                     std::size_t budget = kDefaultBuildBudget);

struct WedgeSummand {
  int element = 0;                   // index into the poset
  int sphere_dim = 0;                // d_p
  bool interval_empty = false;       // no elements below: order complex is {empty face}
  std::vector<long> interval_betti;  // reduced Betti of the lower-interval order complex
  Int interval_euler;                // its reduced Euler characteristic
};

struct WedgeReport {
  IntersectionPoset poset;
  std::vector<WedgeSummand> summands;
  // Predicted reduced homology of the coloring complex:
  //   beta_i = sum_p beta_{i - d_p - 1}(order complex below p),
  // where an empty lower interval contributes 1 in degree d_p.
  std::vector<long> predicted_betti;  // degrees 0..dim
  bool predicted_minus_one = false;   // predicted rank in degree -1 (only for {empty face})
  std::vector<long> direct_betti;     // degrees 0..dim, computed from the complex
  bool direct_minus_one = false;
  bool agree = false;
  bool euler_ok = false;  // chi~ matches the signed sum of interval Euler characteristics
};

WedgeReport wedge_decomposition(const Hypergraph& H, std::size_t budget = kDefaultBuildBudget);

}  // namespace hue
