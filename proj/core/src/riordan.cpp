#include "expriordan/riordan.hpp"

#include <stdexcept>
#include <utility>

namespace expriordan {

namespace {

void check_normalization(const Series& g, const Series& f) {
  if (g.order() != f.order()) {
    throw std::invalid_argument("riordan: g and f orders differ (" + std::to_string(g.order()) + " vs " +
                                std::to_string(f.order()) + ")");
  }
  if (g[0] != 1) throw std::invalid_argument("riordan: g(0) must be 1, got " + to_string(g[0]));
  if (f[0] != 0) throw std::invalid_argument("riordan: f(0) must be 0, got " + to_string(f[0]));
  if (f.order() >= 1 && f[1] != 1) throw std::invalid_argument("riordan: f'(0) must be 1, got " + to_string(f[1]));
}

TriMatrix realize(const Series& g, const Series& f) {
  const std::size_t order = g.order();
  TriMatrix m(order + 1);
  Series power = g;  // g f^k
  for (std::size_t k = 0; k <= order; ++k) {
    const Rational inv_k_fact = 1 / factorial_q(k);
    Rational n_fact = factorial_q(k);
    for (std::size_t n = k; n <= order; ++n) {
      if (n > k) n_fact *= static_cast<unsigned long>(n);
      if (power[n] != 0) m.set(n, k, n_fact * inv_k_fact * power[n]);
    }
    if (k < order) power = mul(power, f);
  }
  return m;
}

#ifndef NDEBUG
void cross_check(const TriMatrix& expected, const ExpRiordan& got, const char* op) {
  if (!(expected == got.matrix())) throw std::logic_error(std::string(op) + ": series and matrix routes disagree");
}
#endif

}  // namespace

ExpRiordan::ExpRiordan(Series g, Series f)
    : g_((check_normalization(g, f), std::move(g))), f_(std::move(f)), matrix_(realize(g_, f_)) {}

ExpRiordan identity_array(std::size_t order) {
  return ExpRiordan(Series::constant(order, 1), Series::identity(order));
}

ExpRiordan multiply(const ExpRiordan& a, const ExpRiordan& b) {
  if (a.order() != b.order()) throw std::invalid_argument("multiply: array orders differ");
  ExpRiordan out(mul(a.g(), compose(b.g(), a.f())), compose(b.f(), a.f()));
#ifndef NDEBUG
  cross_check(mat_mul(a.matrix(), b.matrix()), out, "multiply");
#endif
  return out;
}

ExpRiordan inverse(const ExpRiordan& a) {
  const Series fbar = revert(a.f());
  ExpRiordan out(reciprocal(compose(a.g(), fbar)), fbar);
#ifndef NDEBUG
  cross_check(mat_inverse(a.matrix()), out, "inverse");
#endif
  return out;
}

PolynomialFamily row_polynomials(const TriMatrix& m) {
  PolynomialFamily family;
  family.polys.reserve(m.dim());
  for (std::size_t n = 0; n < m.dim(); ++n) {
    std::vector<Rational> row = m.row(n);
    row.resize(n + 1);
    family.polys.push_back(std::move(row));
  }
  return family;
}

bool is_derivative_subgroup(const ExpRiordan& a) {
  // derive(f) has order N-1; operator== compares at the common order.
  return derive(a.f()) == a.g();
}

bool is_checkerboard(const ExpRiordan& a) { return a.g().is_even() && a.f().is_odd(); }

}  // namespace expriordan
