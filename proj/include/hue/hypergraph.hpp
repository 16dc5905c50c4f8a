#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hue/arith.hpp"
#include "hue/subset.hpp"

namespace hue {

// Subsets of the edge list as bitmasks over edge indices (edge lists are
// capped at 24 edges wherever 2^#E enumeration happens).
using EdgeSet = std::uint64_t;

constexpr int kMaxEdgeEnumeration = 24;

struct Hypergraph {
  int n = 0;                 // ground set [n], vertices 1..n
  std::vector<Mask> edges;   // canonical: each ascending, list sorted lexicographically

  int edge_count() const { return static_cast<int>(edges.size()); }
  EdgeSet all_edges() const { return (EdgeSet(1) << edges.size()) - 1; }
  int min_edge_card() const;
  int max_edge_card() const;
  bool uniform() const;
  std::vector<int> isolated_vertices() const;
  // True if some edge fits inside the given vertex set.
  bool some_edge_inside(Mask m) const;
  std::vector<std::vector<int>> edges_as_lists() const;

  bool operator==(const Hypergraph&) const = default;
};

struct ParsedHypergraph {
  Hypergraph H;
  std::vector<std::string> warnings;  // e.g. isolated vertices
};

// Validates and canonicalizes. Errors: n < 1, vertex out of range, loop
// (singleton or empty edge), duplicate edge, nested edge pair. With
// reduce_to_minimal, duplicates and non-minimal (superset) edges are dropped
// instead of rejected.
ParsedHypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edge_lists,
                                 bool reduce_to_minimal = false);

// Accepts either input format: JSON {"vertices": n, "edges": [[...], ...]}
// (first non-space byte '{') or the line format
//   n <int>
//   edge <v1> <v2> ...
// with '#' comments.
ParsedHypergraph parse_hypergraph(std::string_view text, bool reduce_to_minimal = false);

// Canonical emitters; parse(to_text(H)) reproduces H bit-for-bit.
std::string to_text(const Hypergraph& H);

struct ComponentPartition {
  std::vector<Mask> blocks;  // sorted by SubsetOrder
  bool ambient = false;
  int count() const { return static_cast<int>(blocks.size()); }
  // Vertex sets of the non-singleton blocks (the "merge pattern").
  std::vector<Mask> merged_blocks() const;
};

enum class ComponentMode { ambient, induced };

// Connected components of ([n], S) (ambient: isolated vertices are singleton
// blocks) or of (union of S, S) (induced). S is given by edge indices.
ComponentPartition component_partition(const Hypergraph& H, EdgeSet S, ComponentMode mode);

// s[a][b] = number of a-subsets S of E whose ambient component count is b,
// for 0 <= a <= #E, 0 <= b <= n; s[0][n] = 1. Enumerates S in binary-counter
// order over the sorted edge list.
struct STable {
  int n = 0;
  int edge_count = 0;
  std::vector<std::vector<Int>> s;
  Int row_sum(int a) const;
};

STable s_table(const Hypergraph& H);

// Named families used throughout the tests and the paper-example data files.
Hypergraph family_single_edge(int n, int s);
Hypergraph family_complete_graph(int n);
Hypergraph family_multi_component(const std::vector<int>& a);
Hypergraph family_torus9();
Hypergraph family_paper6_nonpartitionable();
Hypergraph family_paper6_noncm();

// Dispatcher for the CLI/tests: name in {single_edge, complete_graph,
// multi_component, torus9, paper_6_nonpart, paper_6_noncm}.
Hypergraph generate_family(const std::string& name, const std::vector<int>& params);

}  // namespace hue
