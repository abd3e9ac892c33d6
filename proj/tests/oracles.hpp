#pragma once

// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library's series or matrix algorithms; values
// are plain coefficient vectors so a bug in the library cannot leak into the
// expected side of a comparison.

#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "expriordan/rational.hpp"

namespace oracle {

using expriordan::Rational;
using Poly = std::vector<Rational>;  // ordinary coefficients, truncated to size

inline Rational fact(std::size_t n) {
  Rational r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

inline Poly product(const Poly& a, const Poly& b) {
  Poly c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Poly power(const Poly& a, std::size_t k) {
  Poly r(a.size());
  r[0] = 1;
  for (std::size_t i = 0; i < k; ++i) r = product(r, a);
  return r;
}

// Long division term by term.
inline Poly quotient(const Poly& a, const Poly& b) {
  Poly q(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return q;
}

// exp(s) = sum_k s^k / k!, s(0) = 0, expanded by brute force.
inline Poly exp_brute(const Poly& s) {
  Poly out(s.size());
  Poly term(s.size());
  term[0] = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t n = 0; n < s.size(); ++n) out[n] += term[n] / fact(k);
    term = product(term, s);
  }
  return out;
}

// Compositional inverse by Lagrange inversion:
//   [x^n] fbar = (1/n) [x^{n-1}] (x / f)^n.
inline Poly lagrange_revert(const Poly& f) {
  const std::size_t len = f.size();
  Poly f_over_x(len);  // f / x, one coefficient short at the top
  for (std::size_t n = 1; n < len; ++n) f_over_x[n - 1] = f[n];
  Poly one(len);
  one[0] = 1;
  const Poly x_over_f = quotient(one, f_over_x);
  Poly out(len);
  for (std::size_t n = 1; n < len; ++n) out[n] = power(x_over_f, n)[n - 1] / static_cast<unsigned long>(n);
  return out;
}

// t_{n,k} = n!/k! [x^n] g f^k, returned as rows.
inline std::vector<std::vector<Rational>> riordan_rows(const Poly& g, const Poly& f) {
  const std::size_t len = g.size();
  std::vector<std::vector<Rational>> t(len, std::vector<Rational>(len));
  for (std::size_t k = 0; k < len; ++k) {
    const Poly col = product(g, power(f, k));
    for (std::size_t n = k; n < len; ++n) t[n][k] = fact(n) / fact(k) * col[n];
  }
  return t;
}

// Ordinary coefficients from EGF values.
inline Poly from_egf(const std::vector<Rational>& egf) {
  Poly out(egf.size());
  for (std::size_t n = 0; n < egf.size(); ++n) out[n] = egf[n] / fact(n);
  return out;
}

inline std::vector<Rational> to_egf(const Poly& p) {
  std::vector<Rational> out(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) out[n] = p[n] * fact(n);
  return out;
}

// tanh(x) = (e^{2x} - 1) / (e^{2x} + 1); e^{2x} has ordinary coefficients 2^n/n!.
inline Poly tanh_via_exp(std::size_t len) {
  Poly e2(len);
  Rational p = 1;
  for (std::size_t n = 0; n < len; ++n, p *= 2) e2[n] = p / fact(n);
  Poly num = e2, den = e2;
  num[0] -= 1;
  den[0] += 1;
  return quotient(num, den);
}

// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * cofactor_det(minor);
    det += c % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

inline Rational hankel_cofactor(const std::vector<Rational>& seq, std::size_t n) {
  std::vector<std::vector<Rational>> h(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) h[i][j] = seq[i + j];
  }
  return cofactor_det(h);
}

// Moments of a J-fraction as weighted Motzkin paths: level steps at height h
// weigh b_h, a down step from height h weighs lambda_h (lambda[h-1]).
inline std::vector<Rational> motzkin_moments(const std::vector<Rational>& b, const std::vector<Rational>& lambda,
                                             std::size_t count) {
  std::vector<Rational> out;
  std::vector<Rational> paths(count + 1);  // paths[h]: weight of paths ending at height h
  paths[0] = 1;
  out.push_back(1);
  for (std::size_t step = 1; step < count; ++step) {
    std::vector<Rational> next(count + 1);
    for (std::size_t h = 0; h < count; ++h) {
      if (paths[h] == 0) continue;
      next[h + 1] += paths[h];
      if (h < b.size()) next[h] += b[h] * paths[h];
      if (h >= 1 && h - 1 < lambda.size()) next[h - 1] += lambda[h - 1] * paths[h];
    }
    paths = std::move(next);
    out.push_back(paths[0]);
  }
  return out;
}

// Random normalized pair (g(0) = 1, f(0) = 0, f'(0) = 1) with small integer
// or half-integer coefficients, as ordinary coefficient lists of length len.
struct RandomPair {
  Poly g;
  Poly f;
};

inline RandomPair random_pair(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  RandomPair p{Poly(len), Poly(len)};
  p.g[0] = 1;
  if (len > 1) p.f[1] = 1;
  for (std::size_t n = 1; n < len; ++n) p.g[n] = Rational(num(rng)) / den(rng);
  for (std::size_t n = 2; n < len; ++n) p.f[n] = Rational(num(rng)) / den(rng);
  return p;
}

}  // namespace oracle
