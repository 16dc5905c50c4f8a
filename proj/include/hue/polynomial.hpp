#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hue/arith.hpp"

namespace hue {

// Dense univariate polynomial over Q in the power basis, constant term first.
// Trailing zero coefficients are trimmed, so degree() is size-1 (-1 for 0).
struct Poly {
  std::vector<Rat> c;

  static Poly zero() { return Poly{}; }
  static Poly constant(const Rat& v);
  static Poly monomial_x();

  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim();
  Rat eval(const Rat& x) const;
  Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }
  bool integer_coefficients() const;
  bool monic() const;

  bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& p, const Rat& s);

// p(x + shift)
Poly shift_argument(const Poly& p, const Rat& shift);

// The polynomial binom(x, m) = x(x-1)...(x-m+1)/m!; zero polynomial for m<0.
Poly binomial_poly_in_x(long m);

// Lagrange interpolation through points with distinct abscissas.
Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Coefficients as integers, constant first; throws ValidationError if any
// coefficient is not an integer.
std::vector<Int> integer_coefficient_list(const Poly& p);

std::string poly_to_string(const Poly& p, const std::string& var = "k");

}  // namespace hue
