#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hue {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown on invalid user input (bad hypergraph, unknown face, bad flags).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation would exceed an enumeration budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two supposedly equivalent computation routes disagree, or a
// result violates a structural invariant (non-monic chromatic polynomial and
// the like). Always indicates a defect, never bad input.
struct CrossCheckFailure : std::runtime_error {
  explicit CrossCheckFailure(const std::string& what) : std::runtime_error(what) {}
};

Int factorial(long n);

// binomial(n, k) for integer n >= 0; returns 0 outside 0 <= k <= n.
Int binomial(long n, long k);

// Binomial coefficient as a polynomial in its top argument:
// binom_poly(x, m) = x (x-1) ... (x-m+1) / m!, valid for any integer x
// (negative included). m < 0 yields 0.
Int binom_poly(const Int& x, long m);

Int ipow(const Int& base, unsigned long e);

// Number of chains with exactly i+1 distinct elements in the Boolean lattice
// on d atoms (equivalently, i-dimensional faces of the standard triangulation
// of the d-cube): sum_{j=0}^{i} (-1)^j C(i,j) (i-j+2)^d. Memoized.
Int cube_face_count(long d, long i);

Int vec_gcd(const std::vector<Int>& v);

}  // namespace hue
