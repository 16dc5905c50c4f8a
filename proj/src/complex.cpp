#include "hue/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hue {

bool vertex_label_less(VertexOrder order, Mask a, Mask b) {
  if (order == VertexOrder::canonical) return SubsetOrder{}(a, b);
  return SubsetOrderAlt{}(a, b);
}

namespace {

struct ChainHash {
  std::size_t operator()(const std::vector<Mask>& c) const {
    std::size_t h = 1469598103934665603ull;
    for (Mask x : c) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void charge(std::size_t& used, std::size_t budget) {
  if (++used > budget) throw BudgetExceeded("complex build budget exceeded");
}

// Emits the chain passed in, then every strict extension of it inside
// `universe`. Without apexes the elements stay nonempty and proper.
template <typename Sink>
void extend_chain(Mask universe, bool apexes, std::vector<Mask>& chain, Mask last,
                  std::size_t budget, std::size_t& used, Sink&& sink) {
  sink(chain);
  const Mask room = universe & ~last;
  for (Mask u = room; u != 0; u = (u - 1) & room) {
    charge(used, budget);
    const Mask next = last | u;
    if (!apexes && next == universe) continue;
    chain.push_back(next);
    extend_chain(universe, apexes, chain, next, budget, used, sink);
    chain.pop_back();
  }
}

template <typename Sink>
void enumerate_lattice_chains(Mask universe, bool apexes, std::size_t budget, std::size_t& used,
                              Sink&& sink) {
  std::vector<Mask> chain;
  if (apexes) {
    chain.assign(1, Mask(0));
    extend_chain(universe, apexes, chain, Mask(0), budget, used, sink);
  }
  for (Mask u = universe; u != 0; u = (u - 1) & universe) {
    charge(used, budget);
    if (!apexes && u == universe) continue;
    chain.assign(1, u);
    extend_chain(universe, apexes, chain, u, budget, used, sink);
  }
}

// Chains over a block partition: each element is a union of blocks. The
// quotient lattice is walked directly and translated back to vertex masks.
template <typename Sink>
void enumerate_block_chains(const std::vector<Mask>& blocks, bool apexes, std::size_t budget,
                            std::size_t& used, Sink&& sink) {
  const int q = static_cast<int>(blocks.size());
  const Mask universe = full_mask(q);
  std::vector<Mask> ground_chain;
  enumerate_lattice_chains(universe, apexes, budget, used, [&](const std::vector<Mask>& qchain) {
    ground_chain.clear();
    for (Mask qm : qchain) {
      Mask m = 0;
      for (int i = 0; i < q; ++i)
        if ((qm >> i) & 1) m |= blocks[i];
      ground_chain.push_back(m);
    }
    sink(ground_chain);
  });
}

// Depth-first walk over proper chains. `settled` records whether one of the
// gaps closed so far already contains an edge; a subtree where that is still
// false and the remaining tail holds no edge can never produce a face, since
// every later gap is a subset of the tail.
template <typename Sink>
void coloring_dfs(const Hypergraph& H, Mask prev, bool settled, std::vector<Mask>& chain,
                  std::size_t budget, std::size_t& used, Sink&& sink) {
  const Mask ground = full_mask(H.n);
  const Mask tail = ground & ~prev;
  if (!settled && !H.some_edge_inside(tail)) return;
  if (!chain.empty()) sink(chain);
  for (Mask u = tail; u != 0; u = (u - 1) & tail) {
    charge(used, budget);
    const Mask next = prev | u;
    if (next == ground) continue;
    chain.push_back(next);
    coloring_dfs(H, next, settled || H.some_edge_inside(u), chain, budget, used, sink);
    chain.pop_back();
  }
}

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw ValidationError("ground set size out of range for complex construction");
}

}  // namespace

SimplicialComplex complex_from_chains(int n, const std::vector<std::vector<Mask>>& chains,
                                      VertexOrder order) {
  SimplicialComplex K;
  K.ambient_n = n;
  K.order = order;

  std::unordered_set<Mask> label_set;
  std::size_t maxlen = 0;
  for (const auto& c : chains) {
    for (Mask m : c) label_set.insert(m);
    maxlen = std::max(maxlen, c.size());
  }
  K.vertex_labels.assign(label_set.begin(), label_set.end());
  std::sort(K.vertex_labels.begin(), K.vertex_labels.end(),
            [order](Mask a, Mask b) { return vertex_label_less(order, a, b); });

  std::unordered_map<Mask, int> idx;
  idx.reserve(2 * K.vertex_labels.size());
  for (std::size_t i = 0; i < K.vertex_labels.size(); ++i)
    idx[K.vertex_labels[i]] = static_cast<int>(i);

  K.faces.assign(maxlen, {});
  std::vector<int> tuple;
  for (const auto& c : chains) {
    if (c.empty()) continue;
    tuple.clear();
    for (Mask m : c) tuple.push_back(idx.at(m));
    // Inclusion-compatible order: a strictly nested chain maps to a strictly
    // ascending index tuple.
    for (std::size_t i = 1; i < tuple.size(); ++i)
      if (tuple[i - 1] >= tuple[i]) throw std::logic_error("chain does not respect vertex order");
    K.faces[c.size() - 1].push_back(tuple);
  }
  K.finalize();
  return K;
}

void SimplicialComplex::finalize() {
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  for (const auto& list : faces)
    if (list.empty()) throw std::logic_error("face list has a dimension gap");
  index_.assign(faces.size(), {});
  for (std::size_t d = 0; d < faces.size(); ++d) {
    auto& list = faces[d];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    index_[d].reserve(2 * list.size());
    for (std::size_t i = 0; i < list.size(); ++i) index_[d][list[i]] = static_cast<int>(i);
  }
}

std::vector<Int> SimplicialComplex::f_vector() const {
  std::vector<Int> f;
  f.reserve(faces.size() + 1);
  f.emplace_back(1);
  for (const auto& list : faces) f.emplace_back(static_cast<unsigned long>(list.size()));
  return f;
}

std::size_t SimplicialComplex::face_count_total() const {
  std::size_t total = 1;
  for (const auto& list : faces) total += list.size();
  return total;
}

int SimplicialComplex::vertex_index(Mask label) const {
  auto cmp = [this](Mask a, Mask b) { return vertex_label_less(order, a, b); };
  auto it = std::lower_bound(vertex_labels.begin(), vertex_labels.end(), label, cmp);
  if (it == vertex_labels.end() || *it != label) return -1;
  return static_cast<int>(it - vertex_labels.begin());
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
  return face.empty() || face_position(face) >= 0;
}

int SimplicialComplex::face_position(const std::vector<int>& face) const {
  if (face.empty()) return -1;
  const std::size_t d = face.size() - 1;
  if (d >= index_.size()) return -1;
  auto it = index_[d].find(face);
  return it == index_[d].end() ? -1 : it->second;
}

std::vector<Mask> SimplicialComplex::chain_of(const std::vector<int>& face) const {
  std::vector<Mask> chain;
  chain.reserve(face.size());
  for (int i : face) chain.push_back(vertex_labels.at(static_cast<std::size_t>(i)));
  return chain;
}

Face SimplicialComplex::face_as_chain(const std::vector<int>& face) const {
  return Face{chain_of(face)};
}

std::vector<int> SimplicialComplex::face_from_chain(const std::vector<Mask>& chain) const {
  std::vector<int> tuple;
  tuple.reserve(chain.size());
  for (Mask m : chain) {
    int i = vertex_index(m);
    if (i < 0) throw ValidationError("chain element is not a vertex of the complex");
    tuple.push_back(i);
  }
  return tuple;
}

std::vector<std::vector<int>> SimplicialComplex::facet_list() const {
  std::vector<std::vector<char>> covered(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) covered[d].assign(faces[d].size(), 0);
  std::vector<int> sub;
  for (std::size_t d = 1; d < faces.size(); ++d) {
    for (const auto& t : faces[d]) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        sub.clear();
        for (std::size_t i = 0; i < t.size(); ++i)
          if (i != j) sub.push_back(t[i]);
        auto it = index_[d - 1].find(sub);
        if (it == index_[d - 1].end()) throw std::logic_error("complex is not downward closed");
        covered[d - 1][static_cast<std::size_t>(it->second)] = 1;
      }
    }
  }
  std::vector<std::vector<int>> facets;
  for (std::size_t d = 0; d < faces.size(); ++d)
    for (std::size_t i = 0; i < faces[d].size(); ++i)
      if (!covered[d][i]) facets.push_back(faces[d][i]);
  return facets;
}

bool SimplicialComplex::is_pure() const {
  if (faces.empty()) return true;
  const std::size_t top = faces.size();  // facet tuple length when pure
  for (const auto& t : facet_list())
    if (t.size() != top) return false;
  return true;
}

SimplicialComplex build_coloring_complex(const Hypergraph& H, VertexOrder order,
                                         std::size_t budget) {
  check_ground_size(H.n);
  if (H.edges.empty()) throw ValidationError("coloring complex needs at least one edge");
  std::vector<std::vector<Mask>> chains;
  std::vector<Mask> chain;
  std::size_t used = 0;
  coloring_dfs(H, 0, false, chain, budget, used,
               [&](const std::vector<Mask>& c) { chains.push_back(c); });
  return complex_from_chains(H.n, chains, order);
}

SimplicialComplex edge_sphere_complex(const Hypergraph& H, EdgeSet S, VertexOrder order,
                                      std::size_t budget) {
  check_ground_size(H.n);
  if (S == 0) throw ValidationError("edge sphere needs a nonempty set of edges");
  if (S & ~H.all_edges()) throw ValidationError("edge index out of range");
  ComponentPartition part = component_partition(H, S, ComponentMode::ambient);
  std::vector<std::vector<Mask>> chains;
  std::size_t used = 0;
  enumerate_block_chains(part.blocks, false, budget, used,
                         [&](const std::vector<Mask>& c) { chains.push_back(c); });
  return complex_from_chains(H.n, chains, order);
}

SimplicialComplex cube_complex(int n, VertexOrder order, std::size_t budget) {
  check_ground_size(n);
  std::vector<Mask> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) blocks.push_back(Mask(1) << (v - 1));
  std::vector<std::vector<Mask>> chains;
  std::size_t used = 0;
  enumerate_block_chains(blocks, true, budget, used,
                         [&](const std::vector<Mask>& c) { chains.push_back(c); });
  return complex_from_chains(n, chains, order);
}

SimplicialComplex subspace_complex(int n, Mask F, VertexOrder order, std::size_t budget) {
  check_ground_size(n);
  if (F == 0 || !mask_subset(F, full_mask(n)))
    throw ValidationError("subspace complex needs a nonempty subset of the ground set");
  std::vector<Mask> blocks;
  blocks.push_back(F);
  for (int v = 1; v <= n; ++v)
    if (!mask_test(F, v)) blocks.push_back(Mask(1) << (v - 1));
  std::vector<std::vector<Mask>> chains;
  std::size_t used = 0;
  enumerate_block_chains(blocks, true, budget, used,
                         [&](const std::vector<Mask>& c) { chains.push_back(c); });
  return complex_from_chains(n, chains, order);
}

SimplicialComplex box_complex(const Hypergraph& H, VertexOrder order, std::size_t budget) {
  check_ground_size(H.n);
  if (H.edges.empty()) throw ValidationError("box complex needs at least one edge");
  std::unordered_set<std::vector<Mask>, ChainHash> seen;
  std::vector<std::vector<Mask>> chains;
  std::size_t used = 0;
  for (Mask F : H.edges) {
    std::vector<Mask> blocks;
    blocks.push_back(F);
    for (int v = 1; v <= H.n; ++v)
      if (!mask_test(F, v)) blocks.push_back(Mask(1) << (v - 1));
    enumerate_block_chains(blocks, true, budget, used, [&](const std::vector<Mask>& c) {
      if (seen.insert(c).second) chains.push_back(c);
    });
  }
  return complex_from_chains(H.n, chains, order);
}

std::vector<Int> box_face_counts(const Hypergraph& H, std::size_t budget) {
  check_ground_size(H.n);
  if (H.edges.empty()) throw ValidationError("box complex needs at least one edge");
  std::unordered_set<std::vector<Mask>, ChainHash> seen;
  std::vector<std::size_t> count;
  std::size_t used = 0;
  for (Mask F : H.edges) {
    std::vector<Mask> blocks;
    blocks.push_back(F);
    for (int v = 1; v <= H.n; ++v)
      if (!mask_test(F, v)) blocks.push_back(Mask(1) << (v - 1));
    enumerate_block_chains(blocks, true, budget, used, [&](const std::vector<Mask>& c) {
      if (seen.insert(c).second) {
        if (count.size() < c.size()) count.resize(c.size(), 0);
        ++count[c.size() - 1];
      }
    });
  }
  std::vector<Int> f;
  f.reserve(count.size() + 1);
  f.emplace_back(1);
  for (std::size_t k : count) f.emplace_back(static_cast<unsigned long>(k));
  return f;
}

SimplicialComplex link_of_face(const SimplicialComplex& K, const std::vector<int>& face) {
  if (face.empty()) return K;
  if (!K.contains(face)) throw ValidationError("link of a face that is not in the complex");
  std::vector<std::vector<Mask>> chains;
  const int fsz = static_cast<int>(face.size());
  for (int d = fsz; d <= K.dim(); ++d) {
    for (const auto& t : K.faces[static_cast<std::size_t>(d)]) {
      if (!std::includes(t.begin(), t.end(), face.begin(), face.end())) continue;
      std::vector<Mask> c;
      c.reserve(t.size() - face.size());
      for (int i : t)
        if (!std::binary_search(face.begin(), face.end(), i))
          c.push_back(K.vertex_labels[static_cast<std::size_t>(i)]);
      chains.push_back(std::move(c));
    }
  }
  return complex_from_chains(K.ambient_n, chains, K.order);
}

std::vector<Int> h_from_f_complex(const std::vector<Int>& f) {
  // h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}, with d = dim + 1 and
  // f stored as (f_{-1}, f_0, ..., f_{dim}) so f_{i-1} sits at position i.
  const long d = static_cast<long>(f.size()) - 1;
  std::vector<Int> h(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j) {
    Int acc = 0;
    for (long i = 0; i <= j; ++i) {
      Int term = binomial(d - i, j - i) * f[static_cast<std::size_t>(i)];
      if ((j - i) % 2 != 0)
        acc -= term;
      else
        acc += term;
    }
    h[static_cast<std::size_t>(j)] = acc;
  }
  return h;
}

FHVectorOfComplex f_h_vectors_of_complex(const SimplicialComplex& K) {
  FHVectorOfComplex out;
  out.f = K.f_vector();
  out.h = h_from_f_complex(out.f);
  return out;
}

}  // namespace hue
