#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "expriordan/rational.hpp"

namespace expriordan {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N with exact rational
/// coefficients.
///
/// Coefficients are stored in the ordinary (OGF) view. The exponential
/// view a_n = n! c_n is computed on demand. Every binary operation requires
/// both operands to carry the same order N and throws
/// std::invalid_argument otherwise; nothing is truncated silently.
///
/// Values are immutable once constructed.
class Series {
 public:
  static constexpr std::size_t default_order = 16;

  /// The zero series of the given order.
  explicit Series(std::size_t order = default_order);

  /// Ordinary coefficients c_0..c_k, zero-padded up to `order`. Throws
  /// std::invalid_argument if more than order+1 coefficients are given.
  Series(std::size_t order, std::vector<Rational> ogf);

  static Series from_ogf(std::size_t order, std::vector<Rational> coeffs) {
    return Series(order, std::move(coeffs));
  }
  /// Builds a series from EGF coefficients a_n, storing a_n / n!.
  static Series from_egf(std::size_t order, std::span<const Rational> egf);

  static Series constant(std::size_t order, const Rational& c);
  static Series monomial(std::size_t order, std::size_t degree, const Rational& c = 1);
  /// The series x.
  static Series identity(std::size_t order) { return monomial(order, 1); }

  std::size_t order() const { return coeffs_.size() - 1; }

  /// Ordinary coefficient of x^n.
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rational> ogf() const { return coeffs_; }

  /// EGF coefficient n! c_n.
  Rational egf(std::size_t n) const;
  std::vector<Rational> egf_coefficients() const;

  /// Same coefficients cut back to a lower order.
  Series truncated(std::size_t order) const;

  bool is_zero() const;
  bool is_even() const;
  bool is_odd() const;

  /// Compares coefficients up to the smaller of the two orders.
  friend bool operator==(const Series& a, const Series& b);

 private:
  std::vector<Rational> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
/// Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);
/// Throws std::domain_error if b(0) = 0.
Series div(const Series& a, const Series& b);
Series reciprocal(const Series& s);
Series negate(const Series& s);
Series scale(const Series& s, const Rational& c);
/// s(c x).
Series scale_argument(const Series& s, const Rational& c);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }
inline Series operator-(const Series& s) { return negate(s); }
inline Series operator*(const Rational& c, const Series& s) { return scale(s, c); }

/// outer(inner(x)) truncated at the common order. Requires inner(0) = 0
/// (std::domain_error otherwise).
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse by Newton iteration. Requires f(0) = 0 and
/// f'(0) != 0.
Series revert(const Series& f);

/// Formal derivative. The result has order N-1 (order 0 maps to order 0).
Series derive(const Series& s);
/// Antiderivative with zero constant term. The result has order N+1.
Series integrate(const Series& s);

/// exp(s), requires s(0) = 0.
Series exp_series(const Series& s);
/// log(s), requires s(0) = 1.
Series log_series(const Series& s);
/// s^r = exp(r log s), requires s(0) = 1.
Series pow_rational(const Series& s, const Rational& r);

std::string ogf_string(const Series& s);
std::string egf_string(const Series& s);

}  // namespace expriordan
