#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hue {

// Vertex subsets of [n] as bitmasks: bit (v-1) stands for vertex v (vertices
// are 1-based everywhere). n is capped at 62 by the complex builders.
using Mask = std::uint64_t;

constexpr int kMaxGroundSize = 62;

inline Mask full_mask(int n) { return (n >= 64) ? ~Mask(0) : ((Mask(1) << n) - 1); }
inline bool mask_test(Mask m, int v) { return (m >> (v - 1)) & 1; }
inline int mask_card(Mask m) { return __builtin_popcountll(m); }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

Mask mask_from_vertices(const std::vector<int>& verts, int n);
std::vector<int> mask_vertices(Mask m);

// Lexicographic order on the ascending vertex sequences of two subsets
// ({1,4} before {2,3}); a proper prefix precedes its extensions.
bool subset_lex_less(Mask a, Mask b);

// The complex builders order vertices by (cardinality, lexicographic), which
// is inclusion-compatible: A strictly inside B implies A before B.
struct SubsetOrder {
  bool operator()(Mask a, Mask b) const {
    int ca = mask_card(a), cb = mask_card(b);
    if (ca != cb) return ca < cb;
    return subset_lex_less(a, b);
  }
};

// An alternate inclusion-compatible total order (cardinality, reverse lex),
// used by tests to confirm order-independence of topological invariants.
struct SubsetOrderAlt {
  bool operator()(Mask a, Mask b) const {
    int ca = mask_card(a), cb = mask_card(b);
    if (ca != cb) return ca < cb;
    return subset_lex_less(b, a);
  }
};

// "123" when every vertex is a single digit, else comma-separated "1,2,10".
std::string subset_to_string(Mask m, int n);

}  // namespace hue
