#pragma once

#include <string>
#include <vector>

#include "hue/subset.hpp"

namespace hue {

// A face of a coloring-type or cube complex: a strictly increasing chain of
// vertex subsets A_1 < ... < A_l. The equivalent ordered-set-partition view
// has blocks A_1, A_2 minus A_1, ..., ground minus A_l. A chain of l subsets
// is an (l-1)-simplex; the empty chain is the empty face (dimension -1).
struct Face {
  std::vector<Mask> chain;

  int dimension() const { return static_cast<int>(chain.size()) - 1; }
  bool empty() const { return chain.empty(); }

  // Validates strict nesting; elements may include the empty set or the full
  // ground set only when allow_apexes is set (cube complexes).
  void validate(Mask ground, bool allow_apexes = false) const;

  // Partition view. Requires a proper chain (no empty set, no full ground).
  std::vector<Mask> partition_blocks(Mask ground) const;
  static Face from_partition(const std::vector<Mask>& blocks, Mask ground);

  // "123|456" (single-digit ground) or "1,2|3,10"; the empty face is "|".
  std::string partition_string(int n) const;
  static Face parse_partition(const std::string& text, int n);

  bool operator==(const Face&) const = default;
};

}  // namespace hue
