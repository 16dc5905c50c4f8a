#include "hue/elim.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hue {

SparseVec sparse_from_dense(const std::vector<Int>& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.e.emplace_back(static_cast<int>(i), dense[i]);
  return v;
}

std::vector<Int> sparse_to_dense(const SparseVec& v, int size) {
  std::vector<Int> out(static_cast<std::size_t>(size), Int(0));
  for (const auto& [i, val] : v.e) out[static_cast<std::size_t>(i)] = val;
  return out;
}

SparseVec sparse_combine(const Int& a, const SparseVec& u, const Int& b, const SparseVec& v) {
  SparseVec out;
  out.e.reserve(u.e.size() + v.e.size());
  std::size_t i = 0, j = 0;
  while (i < u.e.size() || j < v.e.size()) {
    if (j >= v.e.size() || (i < u.e.size() && u.e[i].first < v.e[j].first)) {
      Int val = a * u.e[i].second;
      if (val != 0) out.e.emplace_back(u.e[i].first, std::move(val));
      ++i;
    } else if (i >= u.e.size() || v.e[j].first < u.e[i].first) {
      Int val = b * v.e[j].second;
      if (val != 0) out.e.emplace_back(v.e[j].first, std::move(val));
      ++j;
    } else {
      Int val = a * u.e[i].second + b * v.e[j].second;
      if (val != 0) out.e.emplace_back(u.e[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return out;
}

void sparse_normalize(SparseVec& v) {
  if (v.e.empty()) return;
  Int g(0);
  for (const auto& [i, val] : v.e) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
    if (g == 1) break;
  }
  if (v.e.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [i, val] : v.e) val /= g;
}

namespace {

// Joint content normalization for a vector and its coefficient tail; the two
// must be scaled together so the tail keeps describing the vector.
void normalize_pair(SparseVec& v, SparseVec& tail) {
  Int g(0);
  for (const auto& [i, val] : v.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
  for (const auto& [i, val] : tail.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& [i, val] : v.e) val /= g;
  for (auto& [i, val] : tail.e) val /= g;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

bool ColumnEchelon::reduce(SparseVec& v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.lead());
    if (it == rows_.end()) return false;
    const SparseVec& row = it->second;
    const Int& p = row.lead_value();
    const Int& a = v.lead_value();
    const Int g = gcd_int(p, a);
    v = sparse_combine(p / g, v, -(a / g), row);
    sparse_normalize(v);
  }
  return true;
}

bool ColumnEchelon::contains(SparseVec v) const { return reduce(v); }

bool ColumnEchelon::insert(SparseVec v) {
  if (reduce(v)) return false;
  sparse_normalize(v);
  const int lead = v.lead();  // before the move; argument order is unspecified
  rows_.emplace(lead, std::move(v));
  return true;
}

RankKernel column_reduce(const SparseMatrix& M, bool want_kernel) {
  RankKernel out;
  std::map<int, std::pair<SparseVec, SparseVec>> ech;  // lead -> (column, tail)
  for (int j = 0; j < M.ncols; ++j) {
    SparseVec v = M.cols[static_cast<std::size_t>(j)];
    SparseVec w;
    if (want_kernel) w.e.emplace_back(j, Int(1));
    while (!v.empty()) {
      auto it = ech.find(v.lead());
      if (it == ech.end()) break;
      const auto& [row, tail] = it->second;
      const Int& p = row.lead_value();
      const Int a = v.lead_value();
      const Int g = gcd_int(p, a);
      const Int ca = p / g;
      const Int cb = -(a / g);
      v = sparse_combine(ca, v, cb, row);
      if (want_kernel) w = sparse_combine(ca, w, cb, tail);
      if (want_kernel)
        normalize_pair(v, w);
      else
        sparse_normalize(v);
    }
    if (v.empty()) {
      if (want_kernel) {
        sparse_normalize(w);
        out.kernel.push_back(std::move(w));
      }
    } else {
      const int lead = v.lead();  // before the move; argument order is unspecified
      ech.emplace(lead, std::make_pair(std::move(v), std::move(w)));
    }
  }
  out.rank = static_cast<long>(ech.size());
  return out;
}

long matrix_rank(const SparseMatrix& M) { return column_reduce(M, false).rank; }

std::vector<Int> SmithResult::torsion() const {
  std::vector<Int> out;
  for (const Int& d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

SmithResult smith_normal_form(const SparseMatrix& M) {
  // Row-major working copy with per-column row membership.
  std::vector<std::map<int, Int>> rows(static_cast<std::size_t>(M.nrows));
  std::vector<std::set<int>> col_rows(static_cast<std::size_t>(M.ncols));
  for (int j = 0; j < M.ncols; ++j) {
    for (const auto& [i, val] : M.cols[static_cast<std::size_t>(j)].e) {
      rows[static_cast<std::size_t>(i)][j] = val;
      col_rows[static_cast<std::size_t>(j)].insert(i);
    }
  }

  auto set_entry = [&](int r, int c, const Int& val) {
    auto& row = rows[static_cast<std::size_t>(r)];
    if (val == 0) {
      row.erase(c);
      col_rows[static_cast<std::size_t>(c)].erase(r);
    } else {
      row[c] = val;
      col_rows[static_cast<std::size_t>(c)].insert(r);
    }
  };
  auto get_entry = [&](int r, int c) -> Int {
    const auto& row = rows[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? Int(0) : it->second;
  };
  // row r2 -= q * row r
  auto row_op = [&](int r2, int r, const Int& q) {
    std::vector<std::pair<int, Int>> updates(rows[static_cast<std::size_t>(r)].begin(),
                                             rows[static_cast<std::size_t>(r)].end());
    for (const auto& [c, val] : updates) set_entry(r2, c, get_entry(r2, c) - q * val);
  };
  // col c2 -= q * col c
  auto col_op = [&](int c2, int c, const Int& q) {
    std::vector<int> members(col_rows[static_cast<std::size_t>(c)].begin(),
                             col_rows[static_cast<std::size_t>(c)].end());
    for (int r : members) set_entry(r, c2, get_entry(r, c2) - q * get_entry(r, c));
  };

  SmithResult out;
  for (;;) {
    // Pivot search: prefer units, then the smallest fill estimate.
    int pr = -1, pc = -1;
    bool best_unit = false;
    long best_score = 0;
    for (int r = 0; r < M.nrows; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (row.empty()) continue;
      for (const auto& [c, val] : row) {
        const bool unit = (val == 1 || val == -1);
        const long score =
            static_cast<long>(row.size() - 1) *
            static_cast<long>(col_rows[static_cast<std::size_t>(c)].size() - 1);
        if (pr < 0 || (unit && !best_unit) || (unit == best_unit && score < best_score)) {
          pr = r;
          pc = c;
          best_unit = unit;
          best_score = score;
        }
      }
    }
    if (pr < 0) break;

    // Shrink the pivot until it divides everything in its row and column.
    for (;;) {
      Int p = get_entry(pr, pc);
      int bad_row = -1;
      for (int r : col_rows[static_cast<std::size_t>(pc)]) {
        if (r == pr) continue;
        if (get_entry(r, pc) % p != 0) {
          bad_row = r;
          break;
        }
      }
      if (bad_row >= 0) {
        const Int q = get_entry(bad_row, pc) / p;
        row_op(bad_row, pr, q);  // remainder, strictly smaller than |p|
        pr = bad_row;
        continue;
      }
      int bad_col = -1;
      for (const auto& [c, val] : rows[static_cast<std::size_t>(pr)]) {
        if (c == pc) continue;
        if (val % p != 0) {
          bad_col = c;
          break;
        }
      }
      if (bad_col >= 0) {
        const Int q = get_entry(pr, bad_col) / p;
        col_op(bad_col, pc, q);
        pc = bad_col;
        continue;
      }
      break;
    }

    // Clear the pivot column by row operations, then the pivot row by column
    // operations (which by then touch only the pivot row).
    const Int p = get_entry(pr, pc);
    std::vector<int> col_members(col_rows[static_cast<std::size_t>(pc)].begin(),
                                 col_rows[static_cast<std::size_t>(pc)].end());
    for (int r : col_members) {
      if (r == pr) continue;
      row_op(r, pr, get_entry(r, pc) / p);
    }
    std::vector<int> row_members;
    for (const auto& [c, val] : rows[static_cast<std::size_t>(pr)])
      if (c != pc) row_members.push_back(c);
    for (int c : row_members) col_op(c, pc, get_entry(pr, c) / p);

    out.diagonal.push_back(p < 0 ? Int(-p) : p);
    set_entry(pr, pc, Int(0));
  }

  // Pairwise gcd/lcm sweeps until the divisibility chain holds.
  auto& d = out.diagonal;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] % d[i] == 0) continue;
        const Int g = gcd_int(d[i], d[j]);
        const Int l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
        changed = true;
      }
    }
  }
  std::sort(d.begin(), d.end());
  out.rank = static_cast<long>(d.size());
  return out;
}

void IntegerLattice::insert(SparseVec v) {
  // No content division here: scaling a generator would change the lattice.
  while (!v.empty()) {
    auto it = rows_.find(v.lead());
    if (it == rows_.end()) {
      if (v.lead_value() < 0)
        for (auto& [i, val] : v.e) val = -val;
      const int lead = v.lead();  // before the move; argument order is unspecified
      rows_.emplace(lead, std::move(v));
      return;
    }
    SparseVec& pivot = it->second;
    const Int& p = pivot.lead_value();
    const Int& a = v.lead_value();
    if (a % p == 0) {
      v = sparse_combine(Int(1), v, -(a / p), pivot);
      continue;
    }
    // Replace the pivot by the gcd combination, keep reducing the rest.
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    SparseVec new_pivot = sparse_combine(s, pivot, t, v);
    SparseVec rest = sparse_combine(p / g, v, -(a / g), pivot);
    pivot = std::move(new_pivot);
    v = std::move(rest);
  }
}

bool IntegerLattice::contains(SparseVec v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.lead());
    if (it == rows_.end()) return false;
    const SparseVec& pivot = it->second;
    const Int& p = pivot.lead_value();
    const Int& a = v.lead_value();
    if (a % p != 0) return false;
    v = sparse_combine(Int(1), v, -(a / p), pivot);
  }
  return true;
}

}  // namespace hue
