#include "hue/subset.hpp"

#include "hue/arith.hpp"

namespace hue {

Mask mask_from_vertices(const std::vector<int>& verts, int n) {
  Mask m = 0;
  for (int v : verts) {
    if (v < 1 || v > n)
      throw ValidationError("vertex label " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
    m |= Mask(1) << (v - 1);
  }
  return m;
}

std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    Mask low = m & (~m + 1);
    out.push_back(__builtin_ctzll(low) + 1);
    m ^= low;
  }
  return out;
}

bool subset_lex_less(Mask a, Mask b) {
  while (a && b) {
    int va = __builtin_ctzll(a), vb = __builtin_ctzll(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;  // a ran out first: proper prefix
}

std::string subset_to_string(Mask m, int n) {
  std::vector<int> vs = mask_vertices(m);
  std::string out;
  bool digits = n <= 9;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i && !digits) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace hue
