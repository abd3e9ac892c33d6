#pragma once

#include <cstddef>
#include <vector>

#include "expriordan/series.hpp"
#include "expriordan/tri_matrix.hpp"

namespace expriordan {

/// Exponential Riordan array [g, f] truncated at order N.
///
/// Holds the defining pair together with the realized (N+1)x(N+1) matrix
/// t_{n,k} = (n!/k!) [x^n] g(x) f(x)^k. The constructor enforces the
/// normalization g(0) = 1, f(0) = 0, f'(0) = 1 and equal orders, throwing
/// std::invalid_argument on any violation.
class ExpRiordan {
 public:
  ExpRiordan(Series g, Series f);

  const Series& g() const { return g_; }
  const Series& f() const { return f_; }
  std::size_t order() const { return g_.order(); }
  const TriMatrix& matrix() const { return matrix_; }

  const Rational& operator()(std::size_t n, std::size_t k) const { return matrix_(n, k); }

  /// Equal pairs imply equal matrices, so only (g, f) are compared.
  friend bool operator==(const ExpRiordan& a, const ExpRiordan& b) {
    return a.order() == b.order() && a.g_ == b.g_ && a.f_ == b.f_;
  }

 private:
  Series g_;
  Series f_;
  TriMatrix matrix_;
};

inline ExpRiordan build(Series g, Series f) { return ExpRiordan(std::move(g), std::move(f)); }

/// The group identity [1, x].
ExpRiordan identity_array(std::size_t order);

/// [g, f] . [u, v] = [g u(f), v(f)].
ExpRiordan multiply(const ExpRiordan& a, const ExpRiordan& b);

/// [g, f]^{-1} = [1 / g(fbar), fbar].
ExpRiordan inverse(const ExpRiordan& a);

/// Row polynomials p_n(x) = sum_k t_{n,k} x^k, coefficient vectors indexed
/// by power.
struct PolynomialFamily {
  std::vector<std::vector<Rational>> polys;

  std::size_t size() const { return polys.size(); }
  const std::vector<Rational>& operator[](std::size_t n) const { return polys.at(n); }
  friend bool operator==(const PolynomialFamily&, const PolynomialFamily&) = default;
};

PolynomialFamily row_polynomials(const TriMatrix& m);
inline PolynomialFamily row_polynomials(const ExpRiordan& a) { return row_polynomials(a.matrix()); }

/// g = f' through order N-1.
bool is_derivative_subgroup(const ExpRiordan& a);
/// g even and f odd.
bool is_checkerboard(const ExpRiordan& a);

}  // namespace expriordan
