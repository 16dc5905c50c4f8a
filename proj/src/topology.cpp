#include "hue/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hue/parallel.hpp"

namespace hue {

namespace {

// Partition notation when the face is a proper chain, subset-chain notation
// for cube-style faces that may contain an apex.
std::string face_label(const SimplicialComplex& K, const std::vector<int>& t) {
  Face f = K.face_as_chain(t);
  try {
    return f.partition_string(K.ambient_n);
  } catch (const ValidationError&) {
    std::string out;
    for (std::size_t i = 0; i < f.chain.size(); ++i) {
      if (i) out += " < ";
      out += f.chain[i] == 0 ? std::string("{}") : subset_to_string(f.chain[i], K.ambient_n);
    }
    return out;
  }
}

}  // namespace

SparseMatrix boundary_matrix(const SimplicialComplex& K, int d) {
  SparseMatrix M;
  const int dim = K.dim();
  if (d < 0 || d > dim + 1) return M;
  if (d == 0) {
    M.nrows = 1;
    M.ncols = dim >= 0 ? static_cast<int>(K.faces[0].size()) : 0;
    M.cols.resize(static_cast<std::size_t>(M.ncols));
    for (auto& col : M.cols) col.e.emplace_back(0, Int(1));
    return M;
  }
  M.nrows = static_cast<int>(K.faces[static_cast<std::size_t>(d - 1)].size());
  M.ncols = d <= dim ? static_cast<int>(K.faces[static_cast<std::size_t>(d)].size()) : 0;
  M.cols.resize(static_cast<std::size_t>(M.ncols));
  std::vector<int> sub;
  for (int c = 0; c < M.ncols; ++c) {
    const auto& t = K.faces[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)];
    auto& col = M.cols[static_cast<std::size_t>(c)];
    for (std::size_t j = 0; j < t.size(); ++j) {
      sub.clear();
      for (std::size_t i = 0; i < t.size(); ++i)
        if (i != j) sub.push_back(t[i]);
      const int r = K.face_position(sub);
      if (r < 0) throw std::logic_error("complex is not downward closed");
      col.e.emplace_back(r, (j % 2 == 0) ? Int(1) : Int(-1));
    }
    std::sort(col.e.begin(), col.e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return M;
}

SparseMatrix coboundary_matrix(const SimplicialComplex& K, int p) {
  const SparseMatrix B = boundary_matrix(K, p + 1);
  SparseMatrix M;
  M.nrows = B.ncols;
  M.ncols = B.nrows;
  M.cols.resize(static_cast<std::size_t>(M.ncols));
  for (int c = 0; c < B.ncols; ++c)
    for (const auto& [r, val] : B.cols[static_cast<std::size_t>(c)].e)
      M.cols[static_cast<std::size_t>(r)].e.emplace_back(c, val);
  // Entries arrive ordered by the outer loop, already ascending per column.
  return M;
}

namespace {

Homology homology_impl(const SimplicialComplex& K, bool integral) {
  Homology out;
  out.integral = integral;
  out.empty_complex = K.empty_face_only();
  const int dim = K.dim();
  Int eu(0);
  for (int d = 0; d <= dim; ++d) {
    const Int fd(static_cast<unsigned long>(K.faces[static_cast<std::size_t>(d)].size()));
    if (d % 2 == 0)
      eu += fd;
    else
      eu -= fd;
  }
  eu -= 1;
  out.euler_reduced = eu;
  if (dim < 0) return out;

  std::vector<long> rank(static_cast<std::size_t>(dim) + 2, 0);
  out.torsion.assign(static_cast<std::size_t>(dim) + 1, {});
  parallel_for(static_cast<std::size_t>(dim) + 2, [&](std::size_t d) {
    const SparseMatrix M = boundary_matrix(K, static_cast<int>(d));
    if (integral) {
      SmithResult snf = smith_normal_form(M);
      rank[d] = snf.rank;
      if (d >= 1) out.torsion[d - 1] = snf.torsion();
    } else {
      rank[d] = matrix_rank(M);
    }
  });
  out.betti.assign(static_cast<std::size_t>(dim) + 1, 0);
  for (int d = 0; d <= dim; ++d) {
    const long fd = static_cast<long>(K.faces[static_cast<std::size_t>(d)].size());
    out.betti[static_cast<std::size_t>(d)] =
        fd - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d) + 1];
  }
  return out;
}

}  // namespace

Homology rational_homology(const SimplicialComplex& K) { return homology_impl(K, false); }
Homology integral_homology(const SimplicialComplex& K) { return homology_impl(K, true); }

SparseVec apply_coboundary(const SimplicialComplex& K, int p, const SparseVec& alpha) {
  SparseVec out;
  const int dim = K.dim();
  if (p < 0 || p + 1 > dim) return out;
  const auto dense =
      sparse_to_dense(alpha, static_cast<int>(K.faces[static_cast<std::size_t>(p)].size()));
  const auto& list = K.faces[static_cast<std::size_t>(p) + 1];
  std::vector<int> sub;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& t = list[i];
    Int val(0);
    for (std::size_t j = 0; j < t.size(); ++j) {
      sub.clear();
      for (std::size_t s = 0; s < t.size(); ++s)
        if (s != j) sub.push_back(t[s]);
      const int pos = K.face_position(sub);
      if (pos < 0) throw std::logic_error("complex is not downward closed");
      if (j % 2 == 0)
        val += dense[static_cast<std::size_t>(pos)];
      else
        val -= dense[static_cast<std::size_t>(pos)];
    }
    if (val != 0) out.e.emplace_back(static_cast<int>(i), std::move(val));
  }
  return out;
}

SparseVec cup_cochain(const SimplicialComplex& K, int p, const SparseVec& alpha, int q,
                      const SparseVec& beta) {
  SparseVec out;
  const int total = p + q;
  if (p < 0 || q < 0 || total > K.dim()) return out;
  const auto a = sparse_to_dense(alpha, static_cast<int>(K.faces[static_cast<std::size_t>(p)].size()));
  const auto b = sparse_to_dense(beta, static_cast<int>(K.faces[static_cast<std::size_t>(q)].size()));
  const auto& list = K.faces[static_cast<std::size_t>(total)];
  std::vector<int> front, back;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& t = list[i];
    front.assign(t.begin(), t.begin() + p + 1);
    back.assign(t.begin() + p, t.end());
    const int fa = K.face_position(front);
    const int fb = K.face_position(back);
    if (fa < 0 || fb < 0) throw std::logic_error("complex is not downward closed");
    Int val = a[static_cast<std::size_t>(fa)] * b[static_cast<std::size_t>(fb)];
    if (val != 0) out.e.emplace_back(static_cast<int>(i), std::move(val));
  }
  return out;
}

CupAnalysis cup_product_analysis(const SimplicialComplex& K, CoefficientRing ring,
                                 std::size_t budget) {
  CupAnalysis out;
  out.ring = ring;
  const int dim = K.dim();
  if (dim < 0) return out;

  std::vector<SparseMatrix> delta(static_cast<std::size_t>(dim) + 1);
  for (int p = 0; p <= dim; ++p) delta[static_cast<std::size_t>(p)] = coboundary_matrix(K, p);

  auto all_ones = [&]() {
    SparseVec ones;
    const std::size_t f0 = K.faces[0].size();
    ones.e.reserve(f0);
    for (std::size_t i = 0; i < f0; ++i) ones.e.emplace_back(static_cast<int>(i), Int(1));
    return ones;
  };

  // Reduced coboundary spans and cohomology generators per degree.
  std::vector<ColumnEchelon> bspace(static_cast<std::size_t>(dim) + 1);
  std::vector<std::vector<SparseVec>> reps(static_cast<std::size_t>(dim) + 1);
  out.cohomology_rank.assign(static_cast<std::size_t>(dim) + 1, 0);
  for (int p = 0; p <= dim; ++p) {
    auto& bs = bspace[static_cast<std::size_t>(p)];
    if (p == 0) {
      bs.insert(all_ones());
    } else {
      for (const auto& col : delta[static_cast<std::size_t>(p) - 1].cols)
        if (!col.empty()) bs.insert(col);
    }
    RankKernel rk = column_reduce(delta[static_cast<std::size_t>(p)], true);
    ColumnEchelon quotient = bs;
    for (const auto& z : rk.kernel)
      if (quotient.insert(z)) reps[static_cast<std::size_t>(p)].push_back(z);
    out.cohomology_rank[static_cast<std::size_t>(p)] =
        static_cast<long>(reps[static_cast<std::size_t>(p)].size());
  }

  // Integer coboundary lattices, built only for degrees that get tested.
  std::vector<std::optional<IntegerLattice>> lattice(static_cast<std::size_t>(dim) + 1);
  auto lattice_for = [&](int t) -> IntegerLattice& {
    auto& slot = lattice[static_cast<std::size_t>(t)];
    if (!slot) {
      IntegerLattice L;
      if (t == 0) {
        L.insert(all_ones());
      } else {
        for (const auto& col : delta[static_cast<std::size_t>(t) - 1].cols)
          if (!col.empty()) L.insert(col);
      }
      slot = std::move(L);
    }
    return *slot;
  };

  // Dense copies of the generators for fast cup evaluation.
  std::vector<std::vector<std::vector<Int>>> dense(static_cast<std::size_t>(dim) + 1);
  for (int p = 0; p <= dim; ++p) {
    const int fp = static_cast<int>(K.faces[static_cast<std::size_t>(p)].size());
    for (const auto& z : reps[static_cast<std::size_t>(p)])
      dense[static_cast<std::size_t>(p)].push_back(sparse_to_dense(z, fp));
  }

  // Only positive-degree classes: a degree-0 factor multiplies like a
  // component indicator and says nothing about the wedge shape.
  std::size_t used = 0;
  std::vector<int> front, back;
  for (int total = 2; total <= dim && !out.product_found; ++total) {
    const auto& list = K.faces[static_cast<std::size_t>(total)];
    for (int p = 1; 2 * p <= total && !out.product_found; ++p) {
      const int q = total - p;
      if (q > dim) continue;
      const auto& ra = dense[static_cast<std::size_t>(p)];
      const auto& rb = dense[static_cast<std::size_t>(q)];
      for (std::size_t ai = 0; ai < ra.size() && !out.product_found; ++ai) {
        for (std::size_t bi = 0; bi < rb.size() && !out.product_found; ++bi) {
          used += list.size();
          if (used > budget) throw BudgetExceeded("cup product budget exceeded");
          SparseVec w;
          for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& t = list[i];
            front.assign(t.begin(), t.begin() + p + 1);
            back.assign(t.begin() + p, t.end());
            const int fa = K.face_position(front);
            const int fb = K.face_position(back);
            Int val = ra[ai][static_cast<std::size_t>(fa)] * rb[bi][static_cast<std::size_t>(fb)];
            if (val != 0) w.e.emplace_back(static_cast<int>(i), std::move(val));
          }
          ++out.pairs_checked;
          if (w.empty()) continue;
          const bool trivial = (ring == CoefficientRing::rational)
                                   ? bspace[static_cast<std::size_t>(total)].contains(w)
                                   : lattice_for(total).contains(w);
          if (!trivial) {
            out.product_found = true;
            CupWitness wit;
            wit.p = p;
            wit.q = q;
            wit.gen_p = static_cast<int>(ai);
            wit.gen_q = static_cast<int>(bi);
            wit.face = face_label(K, list[static_cast<std::size_t>(w.e.front().first)]);
            out.witness = wit;
          }
        }
      }
    }
  }
  out.wedge_of_spheres = !out.product_found;
  return out;
}

ConnectednessReport connectedness_check(const Hypergraph& H, bool with_homology,
                                        std::size_t budget) {
  if (H.edges.empty())
    throw ValidationError("connectedness analysis needs at least one edge");
  ConnectednessReport out;
  const int m = H.edge_count();
  const Mask full = full_mask(H.n);
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Mask u = H.edges[static_cast<std::size_t>(i)] | H.edges[static_cast<std::size_t>(j)];
      const Mask x = H.edges[static_cast<std::size_t>(i)] & H.edges[static_cast<std::size_t>(j)];
      const bool compatible = (u != full) || (x == 0);
      if (compatible) parent[static_cast<std::size_t>(find(i))] = find(j);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < m; ++i) comps[find(i)].push_back(i);
  for (auto& [root, members] : comps) out.compat_components.push_back(members);
  std::sort(out.compat_components.begin(), out.compat_components.end());
  out.compat_count = static_cast<int>(out.compat_components.size());

  out.predicted_components = 0;
  for (const auto& members : out.compat_components) {
    if (members.size() >= 2) {
      out.predicted_components += 1;
      continue;
    }
    const int card = mask_card(H.edges[static_cast<std::size_t>(members.front())]);
    if (card == H.n)
      out.predicted_components += 0;  // a single {empty face} sphere
    else if (card == H.n - 1)
      out.predicted_components += 2;  // zero-dimensional sphere, two points
    else
      out.predicted_components += 1;
  }
  out.plain_rule_applies = H.max_edge_card() <= H.n - 2;

  if (with_homology) {
    SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, budget);
    out.empty_complex = K.empty_face_only();
    if (K.empty_face_only()) {
      out.cross_check_ok = (out.predicted_components == 0);
    } else {
      const long f0 = static_cast<long>(K.faces[0].size());
      const long rank1 = matrix_rank(boundary_matrix(K, 1));
      out.betti0 = f0 - 1 - rank1;
      out.cross_check_ok = (*out.betti0 + 1 == out.predicted_components);
    }
  }
  return out;
}

CMReport reisner_cm_check(const SimplicialComplex& K, std::size_t budget) {
  CMReport out;
  if (K.empty_face_only()) {
    out.verdict = "CM-over-Q";
    return out;
  }
  const int dim = K.dim();

  // Cohen-Macaulay complexes are pure; a short facet is already a verdict.
  const std::size_t top = static_cast<std::size_t>(dim) + 1;
  for (const auto& t : K.facet_list()) {
    if (t.size() != top) {
      out.pure = false;
      out.verdict = "not-CM";
      out.witness_face = face_label(K, t);
      return out;
    }
  }

  auto link_violation = [](const SimplicialComplex& L) -> std::optional<std::pair<int, long>> {
    const Homology h = rational_homology(L);
    for (int i = 0; i + 1 <= L.dim(); ++i)
      if (h.betti[static_cast<std::size_t>(i)] != 0)
        return std::make_pair(i, h.betti[static_cast<std::size_t>(i)]);
    return std::nullopt;
  };

  std::size_t used = 0;
  for (int d = 0; d <= dim; ++d) {
    const auto& list = K.faces[static_cast<std::size_t>(d)];
    std::vector<std::vector<std::vector<Mask>>> links(list.size());
    std::vector<int> pick;
    for (int wd = d + 1; wd <= dim; ++wd) {
      for (const auto& t : K.faces[static_cast<std::size_t>(wd)]) {
        // every (d+1)-subset of t, by the usual combination odometer
        const int s = static_cast<int>(t.size());
        pick.assign(static_cast<std::size_t>(d) + 1, 0);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
          ++used;
          if (used > budget) {
            out.verdict = "budget-exceeded";
            return out;
          }
          std::vector<int> sub;
          sub.reserve(pick.size());
          for (int idx : pick) sub.push_back(t[static_cast<std::size_t>(idx)]);
          const int pos = K.face_position(sub);
          if (pos < 0) throw std::logic_error("complex is not downward closed");
          std::vector<Mask> rest;
          rest.reserve(t.size() - pick.size());
          std::size_t pi = 0;
          for (int idx = 0; idx < s; ++idx) {
            if (pi < pick.size() && pick[pi] == idx) {
              ++pi;
              continue;
            }
            rest.push_back(K.vertex_labels[static_cast<std::size_t>(t[static_cast<std::size_t>(idx)])]);
          }
          links[static_cast<std::size_t>(pos)].push_back(std::move(rest));
          // advance the combination
          int j = d;
          while (j >= 0 && pick[static_cast<std::size_t>(j)] == j + s - (d + 1)) --j;
          if (j < 0) break;
          ++pick[static_cast<std::size_t>(j)];
          for (int l = j + 1; l <= d; ++l)
            pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
        }
      }
    }
    std::vector<std::optional<std::pair<int, long>>> violation(list.size());
    parallel_for(list.size(), [&](std::size_t i) {
      const SimplicialComplex L = complex_from_chains(K.ambient_n, links[i], K.order);
      violation[i] = link_violation(L);
    });
    out.links_checked += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (violation[i]) {
        out.verdict = "not-CM";
        out.witness_face = face_label(K, list[i]);
        out.witness_degree = violation[i]->first;
        out.witness_betti = violation[i]->second;
        return out;
      }
    }
  }

  // The empty face comes last: its link is the whole complex.
  ++out.links_checked;
  if (auto v = link_violation(K)) {
    out.verdict = "not-CM";
    out.witness_face = "|";
    out.witness_degree = v->first;
    out.witness_betti = v->second;
    return out;
  }
  out.verdict = "CM-over-Q";
  return out;
}

}  // namespace hue
