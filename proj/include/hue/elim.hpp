#pragma once

#include <map>
#include <vector>

#include "hue/arith.hpp"

namespace hue {

// Sparse integer vector: (index, value) pairs with ascending indices and no
// zero values. Scalar multiples represent the same direction over Q; the
// routines below keep entries small by dividing out the content.
struct SparseVec {
  std::vector<std::pair<int, Int>> e;

  bool empty() const { return e.empty(); }
  int lead() const { return e.front().first; }
  const Int& lead_value() const { return e.front().second; }
};

SparseVec sparse_from_dense(const std::vector<Int>& dense);
std::vector<Int> sparse_to_dense(const SparseVec& v, int size);

// a*u + b*v with merged indices.
SparseVec sparse_combine(const Int& a, const SparseVec& u, const Int& b, const SparseVec& v);

// Divide by the content and make the leading value positive.
void sparse_normalize(SparseVec& v);

// Column-major sparse integer matrix.
struct SparseMatrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<SparseVec> cols;
};

// Echelon basis of a rational span, kept with integer entries. Used for rank
// computations and membership tests (coboundary checks, quotient
// independence).
class ColumnEchelon {
 public:
  // Reduces v in place against the basis; returns true if v vanished.
  bool reduce(SparseVec& v) const;
  bool contains(SparseVec v) const;
  // Adds v to the span; returns false (and changes nothing) if dependent.
  bool insert(SparseVec v);
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  std::map<int, SparseVec> rows_;  // leading index -> basis vector
};

struct RankKernel {
  long rank = 0;
  std::vector<SparseVec> kernel;  // basis of {x : Mx = 0}, only if requested
};

// Left-to-right column reduction over Q; with want_kernel the reduction
// coefficients are carried along so vanished columns yield kernel vectors.
RankKernel column_reduce(const SparseMatrix& M, bool want_kernel);

long matrix_rank(const SparseMatrix& M);

// Diagonalization by unimodular row and column operations, then a pairwise
// gcd/lcm sweep to enforce the divisibility chain.
struct SmithResult {
  long rank = 0;
  std::vector<Int> diagonal;  // d_1 | d_2 | ... | d_rank, all positive
  std::vector<Int> torsion() const;  // the entries > 1
};

SmithResult smith_normal_form(const SparseMatrix& M);

// Integer lattice spanned by inserted vectors, as an echelon basis with
// distinct leading indices. Membership is exact over Z, not just Q.
class IntegerLattice {
 public:
  void insert(SparseVec v);
  bool contains(SparseVec v) const;
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  std::map<int, SparseVec> rows_;
};

}  // namespace hue
