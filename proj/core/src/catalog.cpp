#include "expriordan/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "expriordan/elementary.hpp"

namespace expriordan {

namespace {

namespace el = elementary;

Series x_(std::size_t order) { return Series::identity(order); }
Series one(std::size_t order) { return Series::constant(order, 1); }

// 1 + c x^d
Series binomial_base(std::size_t order, const Rational& c, std::size_t degree) {
  return one(order) + Series::monomial(order, degree, c);
}

Series tanh_series(std::size_t order) { return div(el::sinh(order), el::cosh(order)); }

Series exp_neg(std::size_t order) { return scale_argument(el::exp(order), -1); }

// 1 - e^{-x}
Series one_minus_exp_neg(std::size_t order) { return one(order) - exp_neg(order); }

Series erf_series(std::size_t order) {
  // sum_n (-1)^n x^{2n+1} / (n! (2n+1))
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 1; k <= order; k += 2) {
    const std::size_t n = (k - 1) / 2;
    Rational r = 1 / (factorial_q(n) * static_cast<unsigned long>(k));
    c[k] = n % 2 == 1 ? Rational(-r) : r;
  }
  return Series(order, std::move(c));
}

Series gaussian(std::size_t order) {
  return exp_series(Series::monomial(order, 2, -1));  // e^{-x^2}
}

Series gompertz_f(std::size_t order) { return exp_series(one_minus_exp_neg(order)) - one(order); }

// log(1 + x) composed into 1 - log(1 + x)
Series one_minus_log1p(std::size_t order) { return one(order) - el::log1p(order); }

// Derivative-subgroup g: f' computed from f one order higher.
SeriesGenerator derivative_of(SeriesGenerator f) {
  return [f = std::move(f)](std::size_t order) { return derive(f(order + 1)); };
}

double sech(double t) { return 1.0 / std::cosh(t); }

std::vector<CatalogEntry> make_registry() {
  std::vector<CatalogEntry> reg;

  {
    CatalogEntry e;
    e.id = "tanh";
    e.g_text = "sech(x)^2";
    e.f_text = "tanh(x)";
    e.notes = "moment array, tridiagonal production";
    e.f_series = tanh_series;
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return std::tanh(t); };
    e.fprime_eval = [](double t) { return sech(t) * sech(t); };
    e.inverse = SeriesPair{
        [](std::size_t n) { return reciprocal(binomial_base(n, -1, 2)); },
        [](std::size_t n) { return el::artanh(n); },
    };
    e.production_gf = ZAGenerator{
        [](std::size_t n) { return Series::monomial(n, 1, -2); },
        [](std::size_t n) { return binomial_base(n, -1, 2); },
    };
    e.production_weight = [](std::size_t n) { return binomial_base(n, -1, 2); };
    e.jacobi = JacobiParams{0, -2, 0, -1};
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "tanh2";
    e.g_text = "sech(2x)^2";
    e.f_text = "tanh(2x)/2";
    e.notes = "moment array, tridiagonal production";
    e.f_series = [](std::size_t n) { return scale(scale_argument(tanh_series(n), 2), Rational(1, 2)); };
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return 0.5 * std::tanh(2 * t); };
    e.fprime_eval = [](double t) { return sech(2 * t) * sech(2 * t); };
    e.inverse = SeriesPair{
        [](std::size_t n) { return reciprocal(binomial_base(n, -4, 2)); },
        [](std::size_t n) { return scale(scale_argument(el::artanh(n), 2), Rational(1, 2)); },
    };
    e.production_gf = ZAGenerator{
        [](std::size_t n) { return Series::monomial(n, 1, -8); },
        [](std::size_t n) { return binomial_base(n, -4, 2); },
    };
    e.production_weight = [](std::size_t n) { return binomial_base(n, -4, 2); };
    e.jacobi = JacobiParams{0, -8, 0, -4};
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "arctan";
    e.g_text = "1/(1+x^2)";
    e.f_text = "arctan(x)";
    e.notes = "coefficient array, tridiagonal production";
    e.f_series = [](std::size_t n) { return el::arctan(n); };
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return std::atan(t); };
    e.fprime_eval = [](double t) { return 1.0 / (1.0 + t * t); };
    e.inverse = SeriesPair{
        [](std::size_t n) {
          const Series c = el::cos(n);
          return reciprocal(mul(c, c));
        },
        [](std::size_t n) { return el::tan(n); },
    };
    e.inverse_production_gf = ZAGenerator{
        [](std::size_t n) { return Series::monomial(n, 1, 2); },
        [](std::size_t n) { return binomial_base(n, 1, 2); },
    };
    e.production_weight = [](std::size_t n) {
      const Series c = el::cos(n);
      return mul(c, c);
    };
    e.inverse_jacobi = JacobiParams{0, 2, 0, 1};
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "algebraic";
    e.g_text = "(1+x^2)^(-3/2)";
    e.f_text = "x/sqrt(1+x^2)";
    e.notes = "not tridiagonal; algebraic row polynomials";
    e.f_series = [](std::size_t n) { return mul(x_(n), pow_rational(binomial_base(n, 1, 2), Rational(-1, 2))); };
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return t / std::sqrt(1 + t * t); };
    e.fprime_eval = [](double t) { return std::pow(1 + t * t, -1.5); };
    e.inverse = SeriesPair{
        [](std::size_t n) { return pow_rational(binomial_base(n, -1, 2), Rational(-3, 2)); },
        [](std::size_t n) { return mul(x_(n), pow_rational(binomial_base(n, -1, 2), Rational(-1, 2))); },
    };
    e.production_gf = ZAGenerator{
        [](std::size_t n) {
          return mul(Series::monomial(n, 1, -3), pow_rational(binomial_base(n, -1, 2), Rational(1, 2)));
        },
        [](std::size_t n) { return pow_rational(binomial_base(n, -1, 2), Rational(3, 2)); },
    };
    e.inverse_production_gf = ZAGenerator{
        [](std::size_t n) {
          return mul(Series::monomial(n, 1, 3), pow_rational(binomial_base(n, 1, 2), Rational(1, 2)));
        },
        [](std::size_t n) { return pow_rational(binomial_base(n, 1, 2), Rational(3, 2)); },
    };
    e.production_weight = [](std::size_t n) { return pow_rational(binomial_base(n, -1, 2), Rational(3, 2)); };
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "quartic";
    e.g_text = "(1+x^4)^(-5/4)";
    e.f_text = "x/(1+x^4)^(1/4)";
    e.notes = "not tridiagonal";
    e.f_series = [](std::size_t n) { return mul(x_(n), pow_rational(binomial_base(n, 1, 4), Rational(-1, 4))); };
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return t / std::pow(1 + t * t * t * t, 0.25); };
    e.fprime_eval = [](double t) { return std::pow(1 + t * t * t * t, -1.25); };
    e.inverse = SeriesPair{
        [](std::size_t n) { return pow_rational(binomial_base(n, -1, 4), Rational(-5, 4)); },
        [](std::size_t n) { return mul(x_(n), pow_rational(binomial_base(n, -1, 4), Rational(-1, 4))); },
    };
    e.production_gf = ZAGenerator{
        [](std::size_t n) {
          return mul(Series::monomial(n, 3, -5), pow_rational(binomial_base(n, -1, 4), Rational(1, 4)));
        },
        [](std::size_t n) { return pow_rational(binomial_base(n, -1, 4), Rational(5, 4)); },
    };
    e.production_weight = [](std::size_t n) { return pow_rational(binomial_base(n, -1, 4), Rational(5, 4)); };
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "gudermann";
    e.g_text = "sech(x)";
    e.f_text = "gd(x) = arctan(sinh(x))";
    e.notes = "moment array after [1, arcsin]";
    e.f_series = [](std::size_t n) { return compose(el::arctan(n), el::sinh(n)); };
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return std::atan(std::sinh(t)); };
    e.fprime_eval = sech;
    e.inverse = SeriesPair{
        [](std::size_t n) { return el::sec(n); },
        [](std::size_t n) { return log_series(el::sec(n) + el::tan(n)); },
    };
    e.production_gf = ZAGenerator{
        [](std::size_t n) { return -el::sin(n); },
        [](std::size_t n) { return el::cos(n); },
    };
    e.inverse_production_gf = ZAGenerator{
        [](std::size_t n) { return el::sinh(n); },
        [](std::size_t n) { return el::cosh(n); },
    };
    e.production_weight = [](std::size_t n) { return el::cos(n); };
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "erf";
    e.g_text = "exp(-x^2)";
    e.f_text = "sqrt(pi)/2 erf(x)";
    e.notes = "moment array after [1, erf]";
    e.f_series = erf_series;
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return std::sqrt(std::numbers::pi) / 2 * std::erf(t); };
    e.fprime_eval = [](double t) { return std::exp(-t * t); };
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "gompertz";
    e.g_text = "exp(1-x-exp(-x))";
    e.f_text = "exp(1-exp(-x))-1";
    e.notes = "Stirling factorization";
    e.checkerboard = false;
    e.f_series = gompertz_f;
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return std::exp(1 - std::exp(-t)) - 1; };
    e.fprime_eval = [](double t) { return std::exp(1 - t - std::exp(-t)); };
    e.inverse = SeriesPair{
        [](std::size_t n) { return reciprocal(mul(binomial_base(n, 1, 1), one_minus_log1p(n))); },
        [](std::size_t n) { return -log_series(one_minus_log1p(n)); },
    };
    e.production_weight = [](std::size_t n) { return mul(binomial_base(n, 1, 1), one_minus_log1p(n)); };
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "cos_sin";
    e.g_text = "cos(x)";
    e.f_text = "sin(x)";
    e.notes = "unit circle; not a sigmoid";
    e.sigmoid = false;
    e.f_series = [](std::size_t n) { return el::sin(n); };
    e.g_series = derivative_of(e.f_series);
    e.f_eval = [](double t) { return std::sin(t); };
    e.fprime_eval = [](double t) { return std::cos(t); };
    e.inverse = SeriesPair{
        [](std::size_t n) { return pow_rational(binomial_base(n, -1, 2), Rational(-1, 2)); },
        [](std::size_t n) { return el::arcsin(n); },
    };
    e.production_gf = ZAGenerator{
        [](std::size_t n) { return mul(Series::monomial(n, 1, -1), pow_rational(binomial_base(n, -1, 2), Rational(-1, 2))); },
        [](std::size_t n) { return pow_rational(binomial_base(n, -1, 2), Rational(1, 2)); },
    };
    e.inverse_production_gf = ZAGenerator{
        [](std::size_t n) {
          const Series s = el::sec(n);
          return mul(el::sin(n), mul(s, s));
        },
        [](std::size_t n) { return el::sec(n); },
    };
    reg.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "pascal";
    e.g_text = "exp(x)";
    e.f_text = "x";
    e.notes = "binomial; not a sigmoid";
    e.derivative_subgroup = false;
    e.checkerboard = false;
    e.sigmoid = false;
    e.g_series = [](std::size_t n) { return el::exp(n); };
    e.f_series = x_;
    e.f_eval = [](double t) { return t; };
    e.fprime_eval = [](double) { return 1.0; };
    e.inverse = SeriesPair{exp_neg, x_};
    e.production_gf = ZAGenerator{one, one};
    e.jacobi = JacobiParams{1, 0, 0, 0};
    e.inverse_jacobi = JacobiParams{-1, 0, 0, 0};
    reg.push_back(std::move(e));
  }
  return reg;
}

const std::vector<CatalogEntry>& registry() {
  static const std::vector<CatalogEntry> reg = make_registry();
  return reg;
}

}  // namespace

const CatalogEntry& entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown catalog id '" + std::string(id) + "'");
}

std::span<const CatalogEntry> entries() { return registry(); }

TriMatrix stirling2(std::size_t n) {
  TriMatrix s(n + 1);
  s.set(0, 0, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= i; ++k) {
      s.set(i, k, s(i - 1, k - 1) + static_cast<unsigned long>(k) * s(i - 1, k));
    }
  }
  return s;
}

bool gompertz_identities(std::size_t n) {
  const ExpRiordan gompertz = entry("gompertz").array(n);

  const ExpRiordan left = build(exp_neg(n), one_minus_exp_neg(n));
  const ExpRiordan right = build(el::exp(n), el::exp(n) - one(n));
  if (!(multiply(left, right) == gompertz)) return false;
  if (!(mat_mul(left.matrix(), right.matrix()) == gompertz.matrix())) return false;

  const ExpRiordan moment_array = build(gompertz.g(), one_minus_exp_neg(n));
  const ExpRiordan stirling_array = build(one(n), el::exp(n) - one(n));
  if (!(multiply(moment_array, stirling_array) == gompertz)) return false;
  if (!(mat_mul(moment_array.matrix(), stirling_array.matrix()) == gompertz.matrix())) return false;

  const TriMatrix s2 = stirling2(n + 1);
  for (std::size_t row = 0; row <= n; ++row) {
    for (std::size_t k = 0; k <= row; ++k) {
      Rational sum = 0;
      for (std::size_t j = 0; j <= row; ++j) {
        const Rational term = s2(row + 1, j + 1) * s2(j + 1, k + 1);
        sum += (row - j) % 2 == 0 ? term : Rational(-term);
      }
      if (sum != gompertz(row, k)) return false;
    }
    Rational first = 0;
    for (std::size_t j = 0; j <= row; ++j) {
      first += (row - j) % 2 == 0 ? s2(row + 1, j + 1) : Rational(-s2(row + 1, j + 1));
    }
    if (first != gompertz(row, 0)) return false;
  }
  return true;
}

bool gudermann_identities(std::size_t order) {
  if (order < 3) throw std::invalid_argument("gudermann_identities: order must be at least 3");
  const ExpRiordan gd = entry("gudermann").array(order);
  const ExpRiordan moment_array = build(reciprocal(el::cosh(order)), tanh_series(order));
  const ExpRiordan arcsin_array = build(one(order), el::arcsin(order));
  if (!(multiply(moment_array, arcsin_array) == gd)) return false;

  const auto params = tridiagonal_params(production_definitional(moment_array));
  if (!params) return false;
  for (std::size_t k = 0; k < order; ++k) {
    const auto kk = static_cast<long>(k);
    if (params->diagonal(k) != 0 || params->subdiagonal(k) != -kk * kk) return false;
  }
  return true;
}

bool erf_identity(std::size_t order) {
  if (order < 3) throw std::invalid_argument("erf_identity: order must be at least 3");
  const ExpRiordan erf = entry("erf").array(order);
  const ExpRiordan gauss = build(gaussian(order), x_(order));
  const ExpRiordan erf_only = build(one(order), erf_series(order));
  if (!(multiply(gauss, erf_only) == erf)) return false;

  const auto params = tridiagonal_params(production_definitional(gauss));
  return params && *params == JacobiParams{0, -2, 0, 0};
}

}  // namespace expriordan
