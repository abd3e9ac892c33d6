#include "expriordan/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace expriordan {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": series order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
  }
}

// Zero-pads (or cuts) to `order`. Only used where the missing high
// coefficients provably do not influence the result.
Series resized(const Series& s, std::size_t order) {
  if (order <= s.order()) return s.truncated(order);
  return Series(order, std::vector<Rational>(s.ogf().begin(), s.ogf().end()));
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Rational> ogf) : coeffs_(std::move(ogf)) {
  if (coeffs_.size() > order + 1) {
    throw std::invalid_argument("series: " + std::to_string(coeffs_.size()) + " coefficients exceed order " +
                                std::to_string(order));
  }
  coeffs_.resize(order + 1);
}

Series Series::from_egf(std::size_t order, std::span<const Rational> egf) {
  if (egf.size() > order + 1) throw std::invalid_argument("series: too many EGF coefficients for order");
  std::vector<Rational> c(order + 1);
  Rational fact = 1;
  for (std::size_t n = 0; n < egf.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    c[n] = egf[n] / fact;
  }
  return Series(order, std::move(c));
}

Series Series::constant(std::size_t order, const Rational& c) { return Series(order, {c}); }

Series Series::monomial(std::size_t order, std::size_t degree, const Rational& c) {
  std::vector<Rational> v(order + 1);
  if (degree <= order) v[degree] = c;
  return Series(order, std::move(v));
}

Rational Series::egf(std::size_t n) const { return coeffs_.at(n) * factorial_q(n); }

std::vector<Rational> Series::egf_coefficients() const {
  std::vector<Rational> out(coeffs_.size());
  Rational fact = 1;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    out[n] = coeffs_[n] * fact;
  }
  return out;
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("series: cannot truncate order " + std::to_string(this->order()) + " to " +
                                std::to_string(order));
  }
  return Series(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

bool Series::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Series::is_even() const {
  for (std::size_t n = 1; n < coeffs_.size(); n += 2) {
    if (coeffs_[n] != 0) return false;
  }
  return true;
}

bool Series::is_odd() const {
  for (std::size_t n = 0; n < coeffs_.size(); n += 2) {
    if (coeffs_[n] != 0) return false;
  }
  return true;
}

bool operator==(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

Series add(const Series& a, const Series& b) {
  require_same_order(a, b, "add");
  std::vector<Rational> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) c[n] = a[n] + b[n];
  return Series(a.order(), std::move(c));
}

Series sub(const Series& a, const Series& b) {
  require_same_order(a, b, "sub");
  std::vector<Rational> c(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) c[n] = a[n] - b[n];
  return Series(a.order(), std::move(c));
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  const std::size_t order = a.order();
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  return Series(order, std::move(c));
}

Series div(const Series& a, const Series& b) {
  require_same_order(a, b, "div");
  if (b[0] == 0) throw std::domain_error("div: divisor has zero constant term");
  const std::size_t order = a.order();
  std::vector<Rational> q(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = a[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (b[k] != 0) acc -= b[k] * q[n - k];
    }
    q[n] = acc / b[0];
  }
  return Series(order, std::move(q));
}

Series reciprocal(const Series& s) { return div(Series::constant(s.order(), 1), s); }

Series negate(const Series& s) { return scale(s, -1); }

Series scale(const Series& s, const Rational& c) {
  std::vector<Rational> v(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) v[n] = s[n] * c;
  return Series(s.order(), std::move(v));
}

Series scale_argument(const Series& s, const Rational& c) {
  std::vector<Rational> v(s.order() + 1);
  Rational power = 1;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    v[n] = s[n] * power;
    power *= c;
  }
  return Series(s.order(), std::move(v));
}

Series compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner, "compose");
  if (inner[0] != 0) throw std::domain_error("compose: inner series has nonzero constant term");
  const std::size_t order = outer.order();
  // Horner: (((c_N) x + c_{N-1}) x + ...) with x := inner.
  Series acc = Series::constant(order, outer[order]);
  for (std::size_t n = order; n-- > 0;) {
    acc = mul(acc, inner);
    std::vector<Rational> v(acc.ogf().begin(), acc.ogf().end());
    v[0] += outer[n];
    acc = Series(order, std::move(v));
  }
  return acc;
}

Series revert(const Series& f) {
  if (f[0] != 0) throw std::domain_error("revert: series has nonzero constant term");
  const std::size_t order = f.order();
  if (order == 0) return f;
  if (f[1] == 0) throw std::domain_error("revert: series has zero linear coefficient");

  const Series x = Series::identity(order);
  // f' at order N; its top coefficient never reaches the correction term
  // because the residual below always starts at degree >= 2.
  const Series fprime = resized(derive(f), order);

  Series g = Series::monomial(order, 1, 1 / f[1]);
  // Each step doubles the number of correct coefficients.
  for (std::size_t correct = 1; correct < order; correct = 2 * correct + 1) {
    const Series residual = compose(f, g) - x;
    if (residual.is_zero()) break;
    g = g - div(residual, compose(fprime, g));
  }
  return g;
}

Series derive(const Series& s) {
  const std::size_t order = s.order();
  if (order == 0) return Series(0);
  std::vector<Rational> v(order);
  for (std::size_t n = 1; n <= order; ++n) v[n - 1] = s[n] * static_cast<unsigned long>(n);
  return Series(order - 1, std::move(v));
}

Series integrate(const Series& s) {
  const std::size_t order = s.order() + 1;
  std::vector<Rational> v(order + 1);
  for (std::size_t n = 0; n < order; ++n) v[n + 1] = s[n] / static_cast<unsigned long>(n + 1);
  return Series(order, std::move(v));
}

Series exp_series(const Series& s) {
  if (s[0] != 0) throw std::domain_error("exp_series: argument has nonzero constant term");
  const std::size_t order = s.order();
  // E' = s' E  gives  n e_n = sum_{k=1}^{n} k s_k e_{n-k}.
  std::vector<Rational> e(order + 1);
  e[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (s[k] != 0) acc += static_cast<unsigned long>(k) * s[k] * e[n - k];
    }
    e[n] = acc / static_cast<unsigned long>(n);
  }
  return Series(order, std::move(e));
}

Series log_series(const Series& s) {
  if (s[0] != 1) throw std::domain_error("log_series: argument must have constant term 1");
  const std::size_t order = s.order();
  if (order == 0) return Series(0);
  return integrate(div(derive(s), s.truncated(order - 1)));
}

Series pow_rational(const Series& s, const Rational& r) {
  if (s[0] != 1) throw std::domain_error("pow_rational: argument must have constant term 1");
  return exp_series(scale(log_series(s), r));
}

std::string ogf_string(const Series& s) {
  return join(std::vector<Rational>(s.ogf().begin(), s.ogf().end()));
}

std::string egf_string(const Series& s) { return join(s.egf_coefficients()); }

}  // namespace expriordan
