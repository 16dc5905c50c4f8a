#include "hue/enumerative.hpp"

#include <atomic>
#include <functional>

#include "hue/parallel.hpp"

namespace hue {

Int PolyFVector::at(long i) const {
  if (i < -1) return Int(0);
  const std::size_t pos = static_cast<std::size_t>(i + 1);
  return pos < values.size() ? values[pos] : Int(0);
}

PolyFVector poly_f_vector(const Poly& p, int n) {
  if (n < 0) throw ValidationError("f-vector length must be non-negative");
  if (p.degree() > n) throw ValidationError("polynomial degree exceeds the f-vector length");
  PolyFVector out;
  out.n = n;
  out.values.assign(static_cast<std::size_t>(n) + 2, Int(0));
  out.values[0] = 1;
  // At k = j only f_0..f_{j-1} contribute and f_{j-1} has coefficient 1.
  for (long j = 1; j <= n + 1; ++j) {
    Int acc(0);
    for (long i = 0; i <= j - 2; ++i)
      acc += out.values[static_cast<std::size_t>(i) + 1] * binomial(j - 1, i);
    Rat rem = p.eval(Rat(static_cast<long>(j))) - Rat(acc);
    rem.canonicalize();
    if (rem.get_den() != 1) throw ValidationError("polynomial is not integer-valued");
    out.values[static_cast<std::size_t>(j)] = rem.get_num();
  }
  if (!(poly_from_f_vector(out) == p))
    throw ValidationError("polynomial does not admit the f-vector representation");
  return out;
}

Poly poly_from_f_vector(const PolyFVector& f) {
  Poly p;
  for (long i = 0; i <= f.n; ++i) {
    Int fi = f.at(i);
    if (fi == 0) continue;
    p = p + scale(shift_argument(binomial_poly_in_x(i), Rat(-1)), Rat(fi));
  }
  return p;
}

PolyHVector poly_h_vector(const Poly& p, int n_prime) {
  if (n_prime < 0) throw ValidationError("h-vector normalization must be non-negative");
  if (p.degree() > n_prime)
    throw ValidationError("polynomial degree exceeds the h-vector normalization");
  PolyHVector out;
  out.n_prime = n_prime;
  out.values.assign(static_cast<std::size_t>(n_prime) + 2, Int(0));
  out.values[0] = 1;
  // At k = j the terms with i > j vanish and h_j carries coefficient 1.
  for (long j = 1; j <= n_prime + 1; ++j) {
    Int acc = binomial(j + n_prime, n_prime);
    for (long i = 1; i <= j - 1; ++i)
      acc += out.values[static_cast<std::size_t>(i)] * binomial(j + n_prime - i, n_prime);
    Rat rem = p.eval(Rat(static_cast<long>(j))) - Rat(acc);
    rem.canonicalize();
    if (rem.get_den() != 1) throw ValidationError("polynomial is not integer-valued");
    out.values[static_cast<std::size_t>(j)] = rem.get_num();
  }
  if (!(poly_from_h_vector(out) == p))
    throw ValidationError("polynomial does not admit the h-vector representation");
  return out;
}

Poly poly_from_h_vector(const PolyHVector& h) {
  const long np = h.n_prime;
  Poly base = binomial_poly_in_x(np);
  Poly p = shift_argument(base, Rat(np));
  for (long i = 1; i <= np + 1; ++i) {
    const Int& hi = h.values[static_cast<std::size_t>(i)];
    if (hi == 0) continue;
    p = p + scale(shift_argument(base, Rat(static_cast<long>(np - i))), Rat(hi));
  }
  return p;
}

PolyHVector h_from_poly_f(const PolyFVector& f, int n_prime) {
  if (n_prime < 0) throw ValidationError("h-vector normalization must be non-negative");
  PolyHVector out;
  out.n_prime = n_prime;
  out.values.assign(static_cast<std::size_t>(n_prime) + 2, Int(0));
  for (long i = 0; i <= n_prime + 1; ++i) {
    Int acc(0);
    for (long k = -1; k <= i - 1; ++k) {
      Int term = binomial(n_prime - k, i - k - 1) * f.at(k);
      if ((i - k - 1) % 2 != 0)
        acc -= term;
      else
        acc += term;
    }
    out.values[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Int cube_h_entry(long d, long n_prime, long i) {
  if (d < 0 || n_prime < 0 || i < 0) throw ValidationError("cube h-vector arguments out of range");
  Int acc = binomial(n_prime + 1, i);
  if (i % 2 != 0) acc = -acc;
  for (long a = 0; a <= i - 1; ++a) {
    for (long b = 0; b <= a; ++b) {
      Int term = binomial(n_prime - a, i - a - 1) * binomial(a, b) *
                 ipow(Int(a - b + 2), static_cast<unsigned long>(d));
      if ((i - a + b - 1) % 2 != 0)
        acc -= term;
      else
        acc += term;
    }
  }
  return acc;
}

ChromaticMethod chromatic_method_from_name(const std::string& name) {
  if (name == "brute") return ChromaticMethod::brute;
  if (name == "faces") return ChromaticMethod::faces;
  if (name == "inclusion_exclusion") return ChromaticMethod::inclusion_exclusion;
  throw ValidationError("unknown chromatic method: " + name);
}

std::string chromatic_method_name(ChromaticMethod method) {
  switch (method) {
    case ChromaticMethod::brute:
      return "brute";
    case ChromaticMethod::faces:
      return "faces";
    case ChromaticMethod::inclusion_exclusion:
      return "inclusion_exclusion";
  }
  return "unknown";
}

namespace {

// Backtracking count of proper colorings with colors 1..k. The color of
// vertex 1 is pinned to 1 and the result scaled by k, which is sound because
// permuting colors is a bijection on proper colorings.
Int brute_count(const Hypergraph& H, long k, std::atomic<std::size_t>& used,
                std::size_t budget) {
  if (k <= 0) return Int(0);
  const int n = H.n;
  std::vector<std::vector<std::vector<int>>> ending(static_cast<std::size_t>(n) + 1);
  for (const auto& e : H.edges_as_lists()) ending[static_cast<std::size_t>(e.back())].push_back(e);
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  color[1] = 1;
  Int total(0);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      total += 1;
      return;
    }
    const int lo = (v == 1) ? 1 : 1;
    const int hi = (v == 1) ? 1 : static_cast<int>(k);
    for (int c = lo; c <= hi; ++c) {
      if (used.fetch_add(1, std::memory_order_relaxed) >= budget)
        throw BudgetExceeded("coloring enumeration budget exceeded");
      color[static_cast<std::size_t>(v)] = c;
      bool ok = true;
      for (const auto& e : ending[static_cast<std::size_t>(v)]) {
        bool mono = true;
        for (int w : e) {
          if (color[static_cast<std::size_t>(w)] != c) {
            mono = false;
            break;
          }
        }
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok) rec(v + 1);
    }
    color[static_cast<std::size_t>(v)] = 0;
  };
  rec(1);
  return total * Int(static_cast<long>(k));
}

Poly chromatic_brute(const Hypergraph& H, std::size_t budget) {
  const int n = H.n;
  std::vector<Int> values(static_cast<std::size_t>(n) + 2);
  std::atomic<std::size_t> used{0};
  parallel_for(static_cast<std::size_t>(n) + 2, [&](std::size_t k) {
    values[k] = brute_count(H, static_cast<long>(k), used, budget);
  });
  std::vector<std::pair<Rat, Rat>> points;
  points.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    points.emplace_back(Rat(k), Rat(values[static_cast<std::size_t>(k)]));
  Poly chi = interpolate(points);
  if (chi.eval(Rat(static_cast<long>(n) + 1)) != Rat(values[static_cast<std::size_t>(n) + 1]))
    throw CrossCheckFailure("interpolated chromatic polynomial misses the spare count");
  return chi;
}

Poly chromatic_from_shift_f(const Hypergraph& H, const std::vector<Int>& shift_f) {
  PolyFVector f;
  f.n = H.n;
  f.values = shift_f;
  // p(k) = chi(k+1), so chi is p evaluated one step down.
  return shift_argument(poly_from_f_vector(f), Rat(-1));
}

Poly chromatic_faces_route(const Hypergraph& H, std::size_t budget) {
  std::vector<Int> boxf{Int(1)};
  if (!H.edges.empty()) boxf = box_face_counts(H, budget);
  std::vector<Int> f(static_cast<std::size_t>(H.n) + 2, Int(0));
  f[0] = 1;
  for (long i = 0; i <= H.n; ++i) {
    Int fi = cube_face_count(H.n, i);
    const std::size_t pos = static_cast<std::size_t>(i) + 1;
    if (pos < boxf.size()) fi -= boxf[pos];
    f[pos] = fi;
  }
  return chromatic_from_shift_f(H, f);
}

Poly chromatic_ie_route(const Hypergraph& H) {
  STable st = s_table(H);
  std::vector<Int> f(static_cast<std::size_t>(H.n) + 2, Int(0));
  f[0] = 1;
  for (long i = 0; i <= H.n; ++i) {
    Int acc(0);
    for (int a = 0; a <= st.edge_count; ++a) {
      Int inner(0);
      for (int b = 0; b <= st.n; ++b) {
        const Int& sab = st.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (sab == 0) continue;
        inner += sab * cube_face_count(b, i);
      }
      if (a % 2 != 0)
        acc -= inner;
      else
        acc += inner;
    }
    f[static_cast<std::size_t>(i) + 1] = acc;
  }
  return chromatic_from_shift_f(H, f);
}

void check_chromatic_shape(const Hypergraph& H, const Poly& chi, const char* route) {
  const bool ok = chi.integer_coefficients() && chi.monic() && chi.degree() == H.n &&
                  chi.eval(Rat(0)) == 0 &&
                  (H.edges.empty() || chi.eval(Rat(1)) == 0);
  if (!ok)
    throw CrossCheckFailure(std::string("chromatic polynomial from the ") + route +
                            " route has the wrong shape");
}

}  // namespace

Poly chromatic_polynomial(const Hypergraph& H, ChromaticMethod method, std::size_t budget) {
  Poly chi;
  switch (method) {
    case ChromaticMethod::brute:
      chi = chromatic_brute(H, budget);
      break;
    case ChromaticMethod::faces:
      chi = chromatic_faces_route(H, budget);
      break;
    case ChromaticMethod::inclusion_exclusion:
      chi = chromatic_ie_route(H);
      break;
  }
  check_chromatic_shape(H, chi, chromatic_method_name(method).c_str());
  return chi;
}

TruncationBound truncated_bound(const Hypergraph& H, const STable& st, int i, int m) {
  if (i < 0 || i > H.n) throw ValidationError("face index out of range");
  if (m < 0 || m > st.edge_count) throw ValidationError("truncation level out of range");
  TruncationBound out;
  out.i = i;
  out.m = m;
  Int acc(0);
  for (int a = 0; a <= m; ++a) {
    Int inner(0);
    for (int b = 0; b <= st.n; ++b) {
      const Int& sab = st.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (sab == 0) continue;
      inner += sab * cube_face_count(b, i);
    }
    if (a % 2 != 0)
      acc -= inner;
    else
      acc += inner;
  }
  out.value = acc;
  out.upper_bound = (m % 2 == 0);
  out.exact = (m == st.edge_count) ||
              (!H.edges.empty() && i >= H.n - H.min_edge_card() + 2);
  return out;
}

EhrhartSeries ehrhart_series_check(const Hypergraph& H, const Poly& chi, long terms,
                                   int normalization, std::size_t budget) {
  if (H.edges.empty())
    throw ValidationError("lattice-point series needs at least one edge");
  if (terms < H.n + 2)
    throw ValidationError("series check needs at least n+2 terms");
  EhrhartSeries out;
  std::vector<Int> boxf = box_face_counts(H, budget);
  const int box_dim = static_cast<int>(boxf.size()) - 2;
  const int np = normalization < 0 ? box_dim : normalization;
  out.f.n = H.n;
  out.f.values = boxf;
  out.f.values.resize(static_cast<std::size_t>(H.n) + 2, Int(0));
  out.counting = poly_from_f_vector(out.f);
  out.numerator = poly_h_vector(out.counting, np);
  out.denominator_exponent = np + 1;

  // (k+1)^n = chi(k+1) + L(k): every point of {0..k+1-1}^n is either a proper
  // (k+1)-coloring or a lattice point of the box union.
  Poly xn;
  xn.c.assign(static_cast<std::size_t>(H.n) + 1, Rat(0));
  xn.c.back() = 1;
  Poly kp1n = shift_argument(xn, Rat(1));
  out.complement_identity = (kp1n == shift_argument(chi, Rat(1)) + out.counting);

  // Series coefficients: [z^k] h(z)/(1-z)^{D+1} = sum_{i<=k} h_i C(k-i+D, D).
  out.termwise_ok = true;
  out.term_ok.assign(static_cast<std::size_t>(terms) + 1, true);
  for (long k = 0; k <= terms; ++k) {
    Int rhs(0);
    for (long i = 0; i <= std::min<long>(k, np + 1); ++i)
      rhs += out.numerator.values[static_cast<std::size_t>(i)] * binomial(k - i + np, np);
    if (out.counting.eval(Rat(k)) != Rat(rhs)) {
      out.term_ok[static_cast<std::size_t>(k)] = false;
      out.termwise_ok = false;
    }
  }
  return out;
}

}  // namespace hue
