#pragma once

// Test-only reference computations. Nothing here goes through CoeffPoly or the
// series engine: polynomials are plain std::map, series are ordinary power
// series over rationals.

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "dgf/coeff_poly.hpp"

namespace ref {

/// Univariate polynomial in w, exponent -> coefficient.
using WPoly = std::map<unsigned, mpz_class>;

inline WPoly mul(const WPoly& a, const WPoly& b) {
  WPoly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// (1+w)^k by k repeated multiplications.
inline WPoly one_plus_w_pow(unsigned k) {
  WPoly p{{0, 1}};
  const WPoly base{{0, 1}, {1, 1}};
  for (unsigned i = 0; i < k; ++i) p = mul(p, base);
  return p;
}

inline bool same(const WPoly& a, const dgf::CoeffPoly& b) {
  if (a.size() != b.size()) return false;
  for (const auto& t : b.terms()) {
    auto it = a.find(t.w_exp);
    if (t.u_exp != 0 || it == a.end() || it->second != t.coeff) return false;
  }
  return true;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Labeled DAGs: a_n = sum_{k>=1} (-1)^(k+1) C(n,k) 2^(k(n-k)) a_{n-k}.
inline std::vector<mpz_class> dag_counts(int n_max) {
  std::vector<mpz_class> a(n_max + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    mpz_class s = 0;
    for (int k = 1; k <= n; ++k) {
      mpz_class t = binomial(n, k) * a[n - k];
      t <<= static_cast<unsigned long>(k) * (n - k);
      s += (k % 2 == 1) ? t : mpz_class(-t);
    }
    a[n] = s;
  }
  return a;
}

/// Ordinary power series over Q, truncated at `order`.
using QSeries = std::vector<mpq_class>;

inline QSeries q_recip(const QSeries& a) {
  QSeries r(a.size());
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    mpq_class s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

/// log(a) for a_0 = 1 via a L' = a'.
inline QSeries q_log(const QSeries& a) {
  QSeries l(a.size());
  for (std::size_t n = 1; n < a.size(); ++n) {
    mpq_class s = mpq_class(n) * a[n];
    for (std::size_t k = 1; k < n; ++k) s -= mpq_class(k) * l[k] * a[n - k];
    l[n] = s / mpq_class(n);
  }
  return l;
}

/// Strongly connected labeled digraphs on n vertices for n <= n_max, from
/// SCC = -log(G ⊙ 1/G) at w = 1 evaluated over the rationals.
inline std::vector<mpz_class> scc_counts(int n_max) {
  QSeries g(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    mpz_class num = 1;
    num <<= static_cast<unsigned long>(n) * (n - (n > 0)) / 2;
    g[n] = mpq_class(num, factorial(n));
  }
  QSeries inv = q_recip(g);
  QSeries had(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    // exponential Hadamard: (a_n/n!)(b_n/n!) n! per coefficient of z^n
    had[n] = g[n] * inv[n] * mpq_class(factorial(n));
    had[n].canonicalize();
  }
  QSeries l = q_log(had);
  std::vector<mpz_class> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    mpq_class c = -l[n] * mpq_class(factorial(n));
    c.canonicalize();
    out[n] = c.get_num();
    if (c.get_den() != 1) out[n] = -1;  // flags a non-integer result
  }
  return out;
}

/// Random polynomial in w, u with small exponents and signed coefficients.
inline dgf::CoeffPoly random_poly(std::mt19937_64& rng, int max_terms = 5, unsigned max_exp = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<dgf::Term> t;
  for (int i = terms(rng); i > 0; --i) t.push_back(dgf::Term{exp(rng), exp(rng), mpz_class(coeff(rng))});
  return dgf::CoeffPoly::from_terms(std::move(t));
}

}  // namespace ref
