#include "expriordan/elementary.hpp"

#include <functional>
#include <vector>

namespace expriordan::elementary {

namespace {

// Series whose ordinary coefficient at n is term(n).
Series tabulate(std::size_t order, const std::function<Rational(std::size_t)>& term) {
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = term(n);
  return Series(order, std::move(c));
}

// (-1)^k / n! on the indices n with the given parity, n = 2k + parity.
Series alternating_factorial(std::size_t order, std::size_t parity, bool alternate) {
  return tabulate(order, [=](std::size_t n) -> Rational {
    if (n % 2 != parity) return 0;
    Rational r = 1 / factorial_q(n);
    if (alternate && ((n - parity) / 2) % 2 == 1) r = -r;
    return r;
  });
}

}  // namespace

Series exp(std::size_t order) {
  return tabulate(order, [](std::size_t n) -> Rational { return 1 / factorial_q(n); });
}

Series sin(std::size_t order) { return alternating_factorial(order, 1, true); }
Series cos(std::size_t order) { return alternating_factorial(order, 0, true); }
Series sinh(std::size_t order) { return alternating_factorial(order, 1, false); }
Series cosh(std::size_t order) { return alternating_factorial(order, 0, false); }

Series tan(std::size_t order) { return div(sin(order), cos(order)); }
Series sec(std::size_t order) { return reciprocal(cos(order)); }

Series arctan(std::size_t order) {
  return tabulate(order, [](std::size_t n) -> Rational {
    if (n % 2 == 0) return 0;
    Rational r(1, static_cast<unsigned long>(n));
    return ((n - 1) / 2) % 2 == 1 ? Rational(-r) : r;
  });
}

Series artanh(std::size_t order) {
  return tabulate(order, [](std::size_t n) -> Rational {
    if (n % 2 == 0) return 0;
    return Rational(1, static_cast<unsigned long>(n));
  });
}

Series arcsin(std::size_t order) {
  // [x^{2k+1}] = C(2k, k) / (4^k (2k+1))
  return tabulate(order, [](std::size_t n) -> Rational {
    if (n % 2 == 0) return 0;
    const unsigned long k = (n - 1) / 2;
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    Rational r(binomial(2 * k, k), four_k * static_cast<unsigned long>(n));
    r.canonicalize();
    return r;
  });
}

Series log1p(std::size_t order) {
  return tabulate(order, [](std::size_t n) -> Rational {
    if (n == 0) return 0;
    Rational r(1, static_cast<unsigned long>(n));
    return n % 2 == 0 ? Rational(-r) : r;
  });
}

}  // namespace expriordan::elementary
