#include "hue/arith.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace hue {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n; use binom_poly");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int binom_poly(const Int& x, long m) {
  if (m < 0) return 0;
  Int num = 1;
  for (long t = 0; t < m; ++t) num *= x - t;
  Int den = factorial(m);
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int cube_face_count(long d, long i) {
  if (d < 0) return 0;
  if (i == -1) return 1;  // the empty chain, matching the f_{-1} = 1 convention
  if (i < -1) return 0;
  static std::map<std::pair<long, long>, Int> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({d, i});
    if (it != cache.end()) return it->second;
  }
  Int acc = 0;
  for (long j = 0; j <= i; ++j) {
    Int term = binomial(i, j) * ipow(Int(i - j + 2), static_cast<unsigned long>(d));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(d, i), acc).first->second;
}

Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace hue
