#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "hue/arith.hpp"
#include "hue/face.hpp"
#include "hue/hypergraph.hpp"
#include "hue/subset.hpp"

namespace hue {

// Both orders are inclusion-compatible (A strictly inside B puts A first),
// which the cup product and the chain/partition bijection rely on. The alt
// order exists so invariance under a change of vertex order can be tested.
enum class VertexOrder { canonical, alt };

bool vertex_label_less(VertexOrder order, Mask a, Mask b);

inline constexpr std::size_t kDefaultBuildBudget = 100'000'000;

struct TupleHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Faces grouped by dimension as sorted tuples of vertex indices. The vertex
// labels are subsets of [ambient_n]; the empty face is implicit. Because the
// vertex order refines inclusion, the index tuple of a face lists its chain
// in nesting order.
struct SimplicialComplex {
  int ambient_n = 0;
  VertexOrder order = VertexOrder::canonical;
  std::vector<Mask> vertex_labels;
  std::vector<std::vector<std::vector<int>>> faces;

  int dim() const { return static_cast<int>(faces.size()) - 1; }
  bool empty_face_only() const { return faces.empty(); }
  std::vector<Int> f_vector() const;
  std::size_t face_count_total() const;  // counts the empty face too

  int vertex_index(Mask label) const;
  bool contains(const std::vector<int>& face) const;
  int face_position(const std::vector<int>& face) const;  // -1 if absent
  std::vector<Mask> chain_of(const std::vector<int>& face) const;
  Face face_as_chain(const std::vector<int>& face) const;
  std::vector<int> face_from_chain(const std::vector<Mask>& chain) const;

  bool is_pure() const;
  std::vector<std::vector<int>> facet_list() const;

  bool operator==(const SimplicialComplex& o) const {
    return ambient_n == o.ambient_n && vertex_labels == o.vertex_labels && faces == o.faces;
  }

  // Sorts face lists and builds the lookup index; builders call this last.
  void finalize();

 private:
  std::vector<std::unordered_map<std::vector<int>, int, TupleHash>> index_;
};

// Assembles a complex from explicit chains (each strictly increasing).
SimplicialComplex complex_from_chains(int n, const std::vector<std::vector<Mask>>& chains,
                                      VertexOrder order);

// All chains with an edge of H inside some gap. Throws for an empty edge set.
SimplicialComplex build_coloring_complex(const Hypergraph& H,
                                         VertexOrder order = VertexOrder::canonical,
                                         std::size_t budget = kDefaultBuildBudget);

// Intersection of the edge spheres of S: chains whose elements are unions of
// component blocks of ([n],S). S must be nonempty.
SimplicialComplex edge_sphere_complex(const Hypergraph& H, EdgeSet S,
                                      VertexOrder order = VertexOrder::canonical,
                                      std::size_t budget = kDefaultBuildBudget);

// Chains in the full Boolean lattice on [n], apex subsets allowed.
SimplicialComplex cube_complex(int n, VertexOrder order = VertexOrder::canonical,
                               std::size_t budget = kDefaultBuildBudget);

// Chains each of whose elements is disjoint from F or contains F.
SimplicialComplex subspace_complex(int n, Mask F, VertexOrder order = VertexOrder::canonical,
                                   std::size_t budget = kDefaultBuildBudget);

// Union of the subspace complexes over all edges of H.
SimplicialComplex box_complex(const Hypergraph& H, VertexOrder order = VertexOrder::canonical,
                              std::size_t budget = kDefaultBuildBudget);

// Face counts (f_{-1}, f_0, ...) of the box complex without materializing it;
// cheaper than box_complex when only the f-vector is needed.
std::vector<Int> box_face_counts(const Hypergraph& H, std::size_t budget = kDefaultBuildBudget);

// Link of a face, as a complex on the induced vertex subset in the same order.
SimplicialComplex link_of_face(const SimplicialComplex& K, const std::vector<int>& face);

struct FHVectorOfComplex {
  std::vector<Int> f;  // (f_{-1}, f_0, ..., f_{dim})
  std::vector<Int> h;  // (h_0, ..., h_{dim+1})
};

FHVectorOfComplex f_h_vectors_of_complex(const SimplicialComplex& K);
std::vector<Int> h_from_f_complex(const std::vector<Int>& f);

}  // namespace hue
