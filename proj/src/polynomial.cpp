#include "hue/polynomial.hpp"

#include <sstream>

namespace hue {

Poly Poly::constant(const Rat& v) {
  Poly p;
  if (v != 0) p.c.push_back(v);
  return p;
}

Poly Poly::monomial_x() {
  Poly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  acc.canonicalize();
  return acc;
}

bool Poly::integer_coefficients() const {
  for (const Rat& v : c)
    if (v.get_den() != 1) return false;
  return true;
}

bool Poly::monic() const { return !c.empty() && c.back() == 1; }

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  out.trim();
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.c.empty() || b.c.empty()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.trim();
  return out;
}

Poly scale(const Poly& p, const Rat& s) {
  Poly out;
  if (s == 0) return out;
  out.c = p.c;
  for (Rat& v : out.c) v *= s;
  return out;
}

Poly shift_argument(const Poly& p, const Rat& shift) {
  // Horner with the linear factor (x + shift).
  Poly lin;
  lin.c = {shift, Rat(1)};
  lin.trim();  // shift may be 0
  Poly acc;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = acc * lin + Poly::constant(p.c[i]);
  }
  return acc;
}

Poly binomial_poly_in_x(long m) {
  if (m < 0) return Poly::zero();
  Poly out = Poly::constant(Rat(1));
  for (long t = 0; t < m; ++t) {
    Poly lin;
    lin.c = {Rat(-t), Rat(1)};
    out = out * lin;
  }
  return scale(out, Rat(1) / Rat(factorial(m)));
}

Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw ValidationError("interpolation points must have distinct abscissas");
  Poly out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      Poly lin;
      lin.c = {-points[j].first, Rat(1)};
      basis = basis * lin;
      denom *= points[i].first - points[j].first;
    }
    denom.canonicalize();
    out = out + scale(basis, points[i].second / denom);
  }
  return out;
}

std::vector<Int> integer_coefficient_list(const Poly& p) {
  std::vector<Int> out;
  out.reserve(p.c.size());
  for (const Rat& v : p.c) {
    if (v.get_den() != 1) throw ValidationError("polynomial has a non-integer coefficient");
    out.push_back(v.get_num());
  }
  return out;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    const Rat& v = p.c[i];
    if (v == 0) continue;
    Rat a = v;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1 || a == -1);
    if (i == 0 || !unit) {
      if (a == -1)
        os << "-1";
      else
        os << a.get_str();
      if (i > 0) os << "*";
    } else if (a == -1) {
      os << "-";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace hue
