#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "expriordan/production.hpp"
#include "expriordan/riordan.hpp"
#include "expriordan/series.hpp"
#include "expriordan/tri_matrix.hpp"

namespace expriordan {

/// Produces the exact truncation of a fixed function at the requested order.
using SeriesGenerator = std::function<Series(std::size_t order)>;
using RealFunction = std::function<double(double)>;

struct SeriesPair {
  SeriesGenerator g;
  SeriesGenerator f;

  ExpRiordan array(std::size_t order) const { return build(g(order), f(order)); }
};

/// Z and A of a production generating function e^{xy}(Z + y A).
struct ZAGenerator {
  SeriesGenerator z;
  SeriesGenerator a;

  ZAPair at(std::size_t order) const { return ZAPair{z(order), a(order)}; }
};

/// A named pair [g, f] with its exact series, its real-valued evaluators
/// for plotting, and the closed forms stated for it.
///
/// Transcendental normalizing constants (sqrt(pi) for erf, e for
/// Gompertz) are absent from the series so every coefficient is rational;
/// the evaluators carry the true functions.
struct CatalogEntry {
  std::string id;
  std::string g_text;
  std::string f_text;
  std::string notes;

  SeriesGenerator g_series;
  SeriesGenerator f_series;
  RealFunction f_eval;
  /// f'; equal to g exactly when derivative_subgroup holds.
  RealFunction fprime_eval;

  bool derivative_subgroup = true;
  bool checkerboard = true;
  /// f is an S-shaped curve (f' > 0, f increasing) on the plotting range.
  bool sigmoid = true;

  /// Closed form of the inverse array, when one is given.
  std::optional<SeriesPair> inverse;
  /// Stated generating function of the production matrix of the array.
  std::optional<ZAGenerator> production_gf;
  /// Stated generating function of the production matrix of the inverse.
  std::optional<ZAGenerator> inverse_production_gf;
  /// w with production matrix U . [w, x] (w = 1 / fbar').
  std::optional<SeriesGenerator> production_weight;
  /// Jacobi parameters when the array's production matrix is tridiagonal.
  std::optional<JacobiParams> jacobi;
  /// Jacobi parameters when the inverse's production matrix is tridiagonal.
  std::optional<JacobiParams> inverse_jacobi;

  ExpRiordan array(std::size_t order) const { return build(g_series(order), f_series(order)); }
};

/// Ids: tanh, tanh2, arctan, algebraic, quartic, gudermann, erf, gompertz,
/// cos_sin, pascal. Throws std::invalid_argument for anything else.
const CatalogEntry& entry(std::string_view id);

/// All entries in registry order.
std::span<const CatalogEntry> entries();

/// Stirling numbers of the second kind S2(n, k), 0 <= k <= n, built from
/// S2(n,k) = S2(n-1,k-1) + k S2(n-1,k).
TriMatrix stirling2(std::size_t n);

/// Checks, for rows 0..n:
///  - [e^{1-x-e^{-x}}, e^{1-e^{-x}} - 1] = [e^{-x}, 1-e^{-x}] . [e^x, e^x - 1]
///  - [e^{1-x-e^{-x}}, e^{1-e^{-x}} - 1] = [e^{1-x-e^{-x}}, 1-e^{-x}] . [1, e^x - 1]
///  - g_{n,k} = sum_j S2(n+1,j+1) (-1)^{n-j} S2(j+1,k+1)
///  - g_{n,0} = sum_j S2(n+1,j+1) (-1)^{n-j}
bool gompertz_identities(std::size_t n);

/// [sech, gd] = [sech, tanh] . [1, arcsin] and [sech, tanh] has a
/// tridiagonal production matrix with b_k = 0, lambda_k = -k^2.
bool gudermann_identities(std::size_t order);

/// [e^{-x^2}, erf] = [e^{-x^2}, x] . [1, erf] and [e^{-x^2}, x] has
/// Jacobi parameters (0, -2, 0, 0).
bool erf_identity(std::size_t order);

}  // namespace expriordan
