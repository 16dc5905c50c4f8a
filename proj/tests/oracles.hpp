// Slow, dense, independent reference implementations used to freeze expected
// values. Everything here favors the dumbest correct algorithm over reuse of
// library code: chains are enumerated by literal DFS over subsets, colorings
// by full k^n iteration, ranks by dense Gaussian elimination, Smith forms by
// the textbook pivot/clear loop.
#pragma once

#include <functional>
#include <vector>

#include "hue/arith.hpp"
#include "hue/complex.hpp"
#include "hue/hypergraph.hpp"
#include "hue/subset.hpp"

namespace hue::oracle {

using ChainPredicate = std::function<bool(const std::vector<Mask>&)>;

// Every strict chain of nonempty proper subsets of [n] passing the filter,
// the empty chain included (callers drop it if they want). Exponential in n;
// keep n <= 7.
inline std::vector<std::vector<Mask>> all_chains(int n, const ChainPredicate& keep) {
  std::vector<std::vector<Mask>> out;
  const Mask full = full_mask(n);
  std::vector<Mask> subsets;
  for (Mask s = 1; s < full; ++s) subsets.push_back(s);

  std::vector<Mask> chain;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (keep(chain)) out.push_back(chain);
    for (std::size_t idx = start; idx < subsets.size(); ++idx) {
      Mask next = subsets[idx];
      if (!chain.empty() && !(mask_subset(chain.back(), next) && chain.back() != next)) continue;
      chain.push_back(next);
      dfs(idx + 1);
      chain.pop_back();
    }
  };
  dfs(0);
  return out;
}

// The chain's blocks: consecutive differences, bottom A_1 and top [n]\A_l
// included.
inline std::vector<Mask> chain_blocks(int n, const std::vector<Mask>& chain) {
  std::vector<Mask> blocks;
  Mask prev = 0;
  for (Mask a : chain) {
    blocks.push_back(a & ~prev);
    prev = a;
  }
  blocks.push_back(full_mask(n) & ~prev);
  return blocks;
}

// Faces of the coloring complex: chains with an edge inside some block.
inline std::vector<std::vector<Mask>> coloring_chains(const Hypergraph& H) {
  return all_chains(H.n, [&](const std::vector<Mask>& chain) {
    if (chain.empty()) return false;  // the empty chain needs an edge inside [n] itself;
                                      // handled by callers via the f_{-1} convention
    for (Mask block : chain_blocks(H.n, chain))
      if (H.some_edge_inside(block)) return true;
    return false;
  });
}

// f-vector (f_{-1}, f_0, ..., f_dim) from an explicit chain list.
inline std::vector<Int> f_vector_of_chains(const std::vector<std::vector<Mask>>& chains) {
  std::vector<Int> f(1, Int(1));
  for (const auto& c : chains) {
    if (c.empty()) continue;
    if (f.size() < c.size() + 1) f.resize(c.size() + 1, Int(0));
    f[c.size()] += 1;
  }
  return f;
}

// Number of proper k-colorings by complete enumeration of all k^n maps.
inline Int color_count(const Hypergraph& H, int k) {
  if (k == 0) return Int(0);
  std::vector<int> color(static_cast<std::size_t>(H.n), 0);
  Int count(0);
  while (true) {
    bool proper = true;
    for (Mask e : H.edges) {
      int first = -1;
      bool mono = true;
      for (int v = 1; v <= H.n && mono; ++v) {
        if (!mask_test(e, v)) continue;
        if (first < 0)
          first = color[static_cast<std::size_t>(v - 1)];
        else if (color[static_cast<std::size_t>(v - 1)] != first)
          mono = false;
      }
      if (mono) {
        proper = false;
        break;
      }
    }
    if (proper) count += 1;
    int pos = 0;
    while (pos < H.n && ++color[static_cast<std::size_t>(pos)] == k) {
      color[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == H.n) break;
  }
  return count;
}

// Dense rank over the rationals by straightforward Gaussian elimination.
inline long dense_rank(std::vector<std::vector<Rat>> m) {
  long rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Textbook Smith normal form of a dense integer matrix: repeatedly move the
// smallest nonzero entry to the pivot, clear its row and column, fix
// divisibility by adding offending rows back in. Returns the diagonal.
inline std::vector<Int> dense_smith(std::vector<std::vector<Int>> m) {
  std::vector<Int> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    Int best(0);
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Int a = abs(m[r][c]);
        if (best == 0 || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    if (best == 0) break;
    std::swap(m[pr], m[t]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][pc], m[r][t]);
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      Int q = m[r][t] / m[t][t];
      if (q != 0)
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      if (m[r][t] != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      Int q = m[t][c] / m[t][t];
      if (q != 0)
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      if (m[t][c] != 0) clean = false;
    }
    if (!clean) continue;  // remainders became new smaller entries; pivot again
    // Divisibility: if some remaining entry is not divisible by the pivot,
    // mix its row into row t and redo this step.
    bool fixed = false;
    for (std::size_t r = t + 1; r < rows && !fixed; ++r)
      for (std::size_t c = t + 1; c < cols && !fixed; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
          fixed = true;
        }
    if (fixed) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

// Dense boundary matrix of K in degree d, rows indexed by (d-1)-faces. Built
// from the face lists alone; d = 0 gives the all-ones augmentation row.
inline std::vector<std::vector<Int>> dense_boundary(const SimplicialComplex& K, int d) {
  std::vector<std::vector<Int>> m;
  if (d < 0 || d > K.dim()) return m;
  const auto& faces = K.faces[static_cast<std::size_t>(d)];
  if (d == 0) {
    m.assign(1, std::vector<Int>(faces.size(), Int(1)));
    return m;
  }
  const auto& below = K.faces[static_cast<std::size_t>(d - 1)];
  m.assign(below.size(), std::vector<Int>(faces.size(), Int(0)));
  for (std::size_t j = 0; j < faces.size(); ++j) {
    for (std::size_t drop = 0; drop < faces[j].size(); ++drop) {
      std::vector<int> sub = faces[j];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      std::size_t row = 0;
      while (row < below.size() && below[row] != sub) ++row;
      m[row][j] = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// Reduced Betti numbers over Q from dense ranks.
inline std::vector<long> dense_betti(const SimplicialComplex& K) {
  std::vector<long> betti;
  if (K.dim() < 0) return betti;
  std::vector<long> rank(static_cast<std::size_t>(K.dim()) + 2, 0);
  for (int d = 0; d <= K.dim(); ++d) {
    auto m = dense_boundary(K, d);
    std::vector<std::vector<Rat>> q(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
      for (const Int& v : m[r]) q[r].push_back(Rat(v));
    rank[static_cast<std::size_t>(d)] = dense_rank(q);
  }
  for (int d = 0; d <= K.dim(); ++d) {
    long fd = static_cast<long>(K.faces[static_cast<std::size_t>(d)].size());
    betti.push_back(fd - rank[static_cast<std::size_t>(d)] -
                    rank[static_cast<std::size_t>(d) + 1]);
  }
  return betti;
}

}  // namespace hue::oracle
