#include "expriordan/production.hpp"

#include <stdexcept>

namespace expriordan {

Rational JacobiParams::diagonal(std::size_t k) const { return alpha + static_cast<unsigned long>(k) * gamma; }

Rational JacobiParams::subdiagonal(std::size_t k) const {
  const auto kk = static_cast<unsigned long>(k);
  return kk * beta + (kk * (kk == 0 ? 0 : kk - 1)) * delta;
}

TriMatrix production_definitional(const ExpRiordan& a) {
  const std::size_t n = a.order();
  if (n == 0) throw std::invalid_argument("production_definitional: order must be at least 1");
  const TriMatrix& m = a.matrix();
  return mat_mul(mat_inverse(m.leading(n)), shift_apply(m).leading(n));
}

ZAPair za_sequences(const Series& g, const Series& f) {
  if (g.order() != f.order()) throw std::invalid_argument("za_sequences: g and f orders differ");
  if (g.order() == 0) throw std::invalid_argument("za_sequences: order must be at least 1");
  if (g[0] == 0) throw std::domain_error("za_sequences: g(0) must be nonzero");
  const std::size_t order = g.order() - 1;
  const Series fbar = revert(f).truncated(order);
  Series z = div(compose(derive(g), fbar), compose(g.truncated(order), fbar));
  Series a = compose(derive(f), fbar);
  return ZAPair{std::move(z), std::move(a)};
}

TriMatrix production_analytic(const ZAPair& za, std::size_t n) {
  if (n == 0) throw std::invalid_argument("production_analytic: dimension must be positive");
  if (za.z.order() + 1 < n || za.a.order() + 1 < n) {
    throw std::invalid_argument("production_analytic: Z/A series too short for a " + std::to_string(n) + "x" +
                                std::to_string(n) + " block");
  }
  TriMatrix p(n, Band::lower_hessenberg);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational i_fact = factorial_q(i);
    for (std::size_t k = 0; k <= i + 1 && k < n; ++k) {
      Rational v = 0;
      if (k <= i) v += i_fact / factorial_q(k) * za.z[i - k];
      if (k >= 1) v += i_fact / factorial_q(k - 1) * za.a[i - k + 1];
      if (v != 0) p.set(i, k, std::move(v));
    }
  }
  return p;
}

std::optional<JacobiParams> tridiagonal_params(const TriMatrix& p) {
  if (p.dim() < 3) return std::nullopt;
  JacobiParams params;
  params.alpha = p(0, 0);
  params.beta = p(1, 0);
  params.gamma = p(1, 1) - params.alpha;
  params.delta = p(2, 1) / 2 - params.beta;
  if (!(jacobi_matrix(params, p.dim()) == p)) return std::nullopt;
  return params;
}

TriMatrix jacobi_matrix(const JacobiParams& params, std::size_t dim) {
  TriMatrix j(dim, Band::lower_hessenberg);
  for (std::size_t k = 0; k < dim; ++k) {
    j.set(k, k, params.diagonal(k));
    if (k + 1 < dim) j.set(k, k + 1, 1);
    if (k >= 1) j.set(k, k - 1, params.subdiagonal(k));
  }
  return j;
}

TriMatrix derivative_production_check(const Series& f) {
  if (f.order() < 2) throw std::invalid_argument("derivative_production_check: order must be at least 2");
  const Series weight = reciprocal(derive(revert(f)));
  const ExpRiordan scaled(weight, Series::identity(weight.order()));
  return shift_apply(scaled.matrix()).leading(weight.order());
}

}  // namespace expriordan
