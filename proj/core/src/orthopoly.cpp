#include "expriordan/orthopoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "expriordan/elementary.hpp"

namespace expriordan {

Recurrence recurrence_from(const JacobiParams& params, std::size_t n) {
  Recurrence r;
  for (std::size_t k = 0; k < n; ++k) r.b.push_back(params.diagonal(k));
  for (std::size_t k = 1; k < n; ++k) r.lambda.push_back(params.subdiagonal(k));
  return r;
}

TriMatrix coefficient_array(const Recurrence& r, std::size_t n) {
  if (r.b.size() < n || (n >= 1 && r.lambda.size() < n - 1)) {
    throw std::invalid_argument("coefficient_array: recurrence too short for degree " + std::to_string(n));
  }
  TriMatrix a(n + 1);
  a.set(0, 0, 1);
  if (n == 0) return a;
  a.set(1, 0, -r.b[0]);
  a.set(1, 1, 1);
  for (std::size_t m = 2; m <= n; ++m) {
    const Rational& b = r.b[m - 1];
    const Rational& lam = r.lambda[m - 2];
    for (std::size_t k = 0; k <= m; ++k) {
      Rational v = 0;
      if (k >= 1) v += a(m - 1, k - 1);
      if (k <= m - 1) v -= b * a(m - 1, k);
      if (k <= m - 2) v -= lam * a(m - 2, k);
      a.set(m, k, std::move(v));
    }
  }
  return a;
}

MomentSequence moments(const Recurrence& r, std::size_t n) {
  return MomentSequence{mat_inverse(coefficient_array(r, n)).column(0)};
}

Rational hankel(std::span<const Rational> seq, std::size_t n) {
  if (seq.size() < 2 * n + 1) {
    throw std::invalid_argument("hankel: need " + std::to_string(2 * n + 1) + " terms, got " +
                                std::to_string(seq.size()));
  }
  const std::size_t dim = n + 1;
  std::vector<std::vector<Rational>> h(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) h[i][j] = seq[i + j];
  }

  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (h[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < dim && h[p][k] == 0) ++p;
      if (p == dim) return 0;
      std::swap(h[k], h[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        h[i][j] = (h[i][j] * h[k][k] - h[i][k] * h[k][j]) / prev;
      }
      h[i][k] = 0;
    }
    prev = h[k][k];
  }
  return sign * h[n][n];
}

std::vector<Rational> hankel_transform(std::span<const Rational> seq, std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(hankel(seq, k));
  return out;
}

HankelFormula parse_hankel_formula(std::string_view id) {
  if (id == "sech2") return HankelFormula::sech_squared;
  if (id == "sec2") return HankelFormula::sec_squared_moments;
  if (id == "tanh") return HankelFormula::tanh;
  throw std::invalid_argument("unknown Hankel formula '" + std::string(id) + "' (expected sech2, sec2 or tanh)");
}

Rational hankel_formula_value(HankelFormula kind, std::size_t n) {
  Integer product = 1;
  switch (kind) {
    case HankelFormula::sech_squared:
      // prod_{k=0}^{n} ((k+2)(1-(k+2)))^{n-k}
      for (std::size_t k = 0; k <= n; ++k) {
        const Integer base = Integer(static_cast<long>(k + 2)) * Integer(-static_cast<long>(k + 1));
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), n - k);
        product *= p;
      }
      return Rational(product);
    case HankelFormula::sec_squared_moments:
      // prod_{k=0}^{n} ((k+1)(k+2))^{n-k}
      for (std::size_t k = 0; k <= n; ++k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), (k + 1) * (k + 2), n - k);
        product *= p;
      }
      return Rational(product);
    case HankelFormula::tanh: {
      // prod_{k=0}^{n} k!^2 * (-1)^{(n+1)/2} * (1 - (-1)^n)/2
      if (n % 2 == 0) return 0;
      for (std::size_t k = 0; k <= n; ++k) {
        const Integer f = factorial(k);
        product *= f * f;
      }
      if (((n + 1) / 2) % 2 == 1) product = -product;
      return Rational(product);
    }
  }
  throw std::logic_error("hankel_formula_value: unhandled kind");
}

std::vector<Rational> hankel_formula_sequence(HankelFormula kind, std::size_t len) {
  if (len == 0) return {};
  const std::size_t order = len - 1;
  Series s(order);
  switch (kind) {
    case HankelFormula::sech_squared: {
      const Series c = elementary::cosh(order);
      s = reciprocal(mul(c, c));
      break;
    }
    case HankelFormula::sec_squared_moments: {
      const Series c = elementary::cos(order);
      s = reciprocal(mul(c, c));
      break;
    }
    case HankelFormula::tanh:
      s = div(elementary::sinh(order), elementary::cosh(order));
      break;
  }
  return s.egf_coefficients();
}

bool hankel_formula_check(HankelFormula kind, std::size_t n) {
  const std::vector<Rational> seq = hankel_formula_sequence(kind, 2 * n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (hankel(seq, k) != hankel_formula_value(kind, k)) return false;
  }
  return true;
}

Recurrence jfraction(std::span<const Rational> m, std::size_t depth) {
  if (m.size() < 2 * depth + 1) {
    throw std::invalid_argument("jfraction: depth " + std::to_string(depth) + " needs " +
                                std::to_string(2 * depth + 1) + " moments, got " + std::to_string(m.size()));
  }
  if (depth > 0 && m[0] != 1) throw std::invalid_argument("jfraction: m_0 must be 1");

  Recurrence r;
  Series level(2 * depth, std::vector<Rational>(m.begin(), m.begin() + static_cast<long>(2 * depth) + 1));
  for (std::size_t k = 0; k < depth; ++k) {
    // level = 1 / (1 - b_k x - lambda_{k+1} x^2 next)
    const Series inv = reciprocal(level);
    Rational b = -inv[1];
    Rational lam = -inv[2];
    r.b.push_back(b);
    r.lambda.push_back(lam);
    if (k + 1 == depth) break;
    if (lam == 0) {
      throw std::domain_error("jfraction: lambda_" + std::to_string(k + 1) +
                              " vanishes (zero Hankel determinant) before depth " + std::to_string(depth));
    }
    const std::size_t next_order = level.order() - 2;
    std::vector<Rational> next(next_order + 1);
    for (std::size_t j = 0; j <= next_order; ++j) next[j] = -inv[j + 2] / lam;
    level = Series(next_order, std::move(next));
  }
  return r;
}

Series cf_to_ogf(const Recurrence& r, std::size_t depth, std::size_t order) {
  if (r.b.size() < depth || (depth >= 1 && r.lambda.size() < depth - 1)) {
    throw std::invalid_argument("cf_to_ogf: recurrence too short for depth " + std::to_string(depth));
  }
  if (depth == 0) throw std::invalid_argument("cf_to_ogf: depth must be positive");
  const Series one = Series::constant(order, 1);
  const Series x = Series::identity(order);
  const Series x2 = Series::monomial(order, 2);

  Series tail(order);  // level `depth` is cut off
  for (std::size_t k = depth; k-- > 0;) {
    Series denom = one - scale(x, r.b[k]);
    if (k + 1 < depth) denom = denom - scale(mul(x2, tail), r.lambda[k]);
    tail = reciprocal(denom);
  }
  return tail;
}

}  // namespace expriordan
