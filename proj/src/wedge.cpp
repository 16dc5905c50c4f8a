#include "hue/wedge.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hue {

namespace {

void charge(std::size_t& used, std::size_t budget, const char* what) {
  if (++used > budget) throw BudgetExceeded(std::string(what) + " budget exceeded");
}

// Every block of a inside some block of b.
bool pattern_refines(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  for (Mask blk : a) {
    bool placed = false;
    for (Mask c : b) {
      if (mask_subset(blk, c)) {
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

// Is every face of inner also a face of outer? Faces are matched through
// their vertex labels, not their indices.
bool subcomplex_of(const SimplicialComplex& inner, const SimplicialComplex& outer) {
  for (const auto& list : inner.faces) {
    for (const auto& t : list) {
      std::vector<int> mapped;
      mapped.reserve(t.size());
      bool ok = true;
      for (int i : t) {
        const int j = outer.vertex_index(inner.vertex_labels[static_cast<std::size_t>(i)]);
        if (j < 0) {
          ok = false;
          break;
        }
        mapped.push_back(j);
      }
      if (!ok || !outer.contains(mapped)) return false;
    }
  }
  return true;
}

// Order complex of the induced strict order on `members`: all chains, i.e.
// pairwise comparable subsets, enumerated along the order itself. Vertex
// labels are the global poset indices as raw masks.
SimplicialComplex interval_order_complex(const std::vector<int>& members,
                                         const std::vector<std::vector<bool>>& less,
                                         std::size_t& used, std::size_t budget) {
  std::vector<std::vector<Mask>> chains;
  std::vector<int> chain;
  auto emit = [&]() {
    std::vector<Mask> labels;
    labels.reserve(chain.size());
    for (int g : chain) labels.push_back(static_cast<Mask>(g));
    std::sort(labels.begin(), labels.end(), [](Mask a, Mask b) {
      return vertex_label_less(VertexOrder::canonical, a, b);
    });
    chains.push_back(std::move(labels));
  };
  std::function<void(int)> extend = [&](int last) {
    emit();
    for (int g : members) {
      if (!less[static_cast<std::size_t>(last)][static_cast<std::size_t>(g)]) continue;
      charge(used, budget, "order complex");
      chain.push_back(g);
      extend(g);
      chain.pop_back();
    }
  };
  for (int g : members) {
    charge(used, budget, "order complex");
    chain.assign(1, g);
    extend(g);
    chain.clear();
  }
  return complex_from_chains(kMaxGroundSize, chains, VertexOrder::canonical);
}

}  // namespace

IntersectionPoset intersection_poset(const Hypergraph& H, std::size_t budget) {
  if (H.edges.empty()) throw ValidationError("intersection poset needs at least one edge");
  if (H.edge_count() > kMaxWedgeEdges)
    throw ValidationError("edge count exceeds the wedge decomposition cap");
  IntersectionPoset P;
  std::size_t used = 0;
  std::map<std::vector<Mask>, int> seen;
  const EdgeSet all = H.all_edges();
  for (EdgeSet S = 1; S <= all; ++S) {
    charge(used, budget, "intersection poset");
    const ComponentPartition part = component_partition(H, S, ComponentMode::ambient);
    std::vector<Mask> pattern = part.merged_blocks();
    auto it = seen.find(pattern);
    if (it != seen.end()) {
      if (S == all) P.top_index = it->second;
      continue;
    }
    PosetElement el;
    el.pattern = std::move(pattern);
    el.representative = S;
    el.block_count = part.count();
    el.sphere_dim = part.count() - 2;
    const int idx = static_cast<int>(P.elements.size());
    seen.emplace(el.pattern, idx);
    P.elements.push_back(std::move(el));
    if (S == all) P.top_index = idx;
  }

  const std::size_t count = P.elements.size();
  std::vector<std::vector<bool>> less(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      charge(used, budget, "intersection poset");
      less[i][j] = pattern_refines(P.elements[i].pattern, P.elements[j].pattern);
    }
  }

  // The order must coincide with face-set containment of the actual sphere
  // intersections; this is cheap and guards the pattern bookkeeping.
  std::vector<SimplicialComplex> spheres(count);
  for (std::size_t i = 0; i < count; ++i)
    spheres[i] = edge_sphere_complex(H, P.elements[i].representative,
                                     VertexOrder::canonical, budget);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      charge(used, budget, "intersection poset");
      if (less[i][j] != subcomplex_of(spheres[j], spheres[i]))
        throw CrossCheckFailure("poset order disagrees with sphere containment");
    }
  }

  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t i = 0; i < count; ++i)
      if (less[i][j]) P.elements[j].below.push_back(static_cast<int>(i));
  return P;
}

WedgeReport wedge_decomposition(const Hypergraph& H, std::size_t budget) {
  WedgeReport out;
  out.poset = intersection_poset(H, budget);
  const auto& els = out.poset.elements;
  const std::size_t count = els.size();

  // Rebuild the strict order from the stored below-lists.
  std::vector<std::vector<bool>> less(count, std::vector<bool>(count, false));
  for (std::size_t j = 0; j < count; ++j)
    for (int i : els[j].below) less[static_cast<std::size_t>(i)][j] = true;

  const SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, budget);
  const Homology direct = rational_homology(K);
  out.direct_betti = direct.betti;
  out.direct_minus_one = direct.empty_complex;
  const int dim = K.dim();

  out.predicted_betti.assign(static_cast<std::size_t>(std::max(dim, -1) + 1), 0);
  out.predicted_minus_one = false;
  Int euler_rhs(0);
  std::size_t used = 0;
  for (std::size_t p = 0; p < count; ++p) {
    WedgeSummand sm;
    sm.element = static_cast<int>(p);
    sm.sphere_dim = els[p].sphere_dim;
    const SimplicialComplex L = interval_order_complex(els[p].below, less, used, budget);
    const Homology h = rational_homology(L);
    sm.interval_empty = h.empty_complex;
    sm.interval_betti = h.betti;
    sm.interval_euler = h.euler_reduced;
    // contribution: beta_{j}(interval) lands in degree d_p + 1 + j, with the
    // empty interval acting as a (-1)-sphere factor (degree d_p).
    if (sm.interval_empty) {
      const int i = sm.sphere_dim;
      if (i == -1)
        out.predicted_minus_one = true;
      else if (i >= 0 && i <= dim)
        out.predicted_betti[static_cast<std::size_t>(i)] += 1;
      else
        throw CrossCheckFailure("wedge summand lands outside the complex dimensions");
    } else {
      for (std::size_t j = 0; j < sm.interval_betti.size(); ++j) {
        const long bj = sm.interval_betti[j];
        if (bj == 0) continue;
        const int i = sm.sphere_dim + 1 + static_cast<int>(j);
        if (i < 0 || i > dim)
          throw CrossCheckFailure("wedge summand lands outside the complex dimensions");
        out.predicted_betti[static_cast<std::size_t>(i)] += bj;
      }
    }
    const int sign = (sm.sphere_dim + 1) % 2;
    if (sign == 0)
      euler_rhs += sm.interval_euler;
    else
      euler_rhs -= sm.interval_euler;
    out.summands.push_back(std::move(sm));
  }

  out.agree = (out.predicted_betti == out.direct_betti) &&
              (out.predicted_minus_one == out.direct_minus_one);
  out.euler_ok = (direct.euler_reduced == euler_rhs);
  return out;
}

}  // namespace hue
