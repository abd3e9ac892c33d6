#pragma once

#include <cstddef>
#include <optional>

#include "expriordan/riordan.hpp"
#include "expriordan/series.hpp"
#include "expriordan/tri_matrix.hpp"

namespace expriordan {

/// Ordinary coefficients of Z(x) = g'(fbar)/g(fbar) and A(x) = f'(fbar).
/// The production matrix has bivariate generating function
/// e^{xy} (Z(x) + y A(x)).
struct ZAPair {
  Series z;
  Series a;
};

/// Tridiagonal production form e^{xy}(alpha + beta x + y(1 + gamma x + delta x^2)).
struct JacobiParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;

  /// b_k = alpha + k gamma
  Rational diagonal(std::size_t k) const;
  /// lambda_k = k beta + k(k-1) delta
  Rational subdiagonal(std::size_t k) const;

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// P = M^{-1} (U M) on the leading N x N block, where M is the (N+1)x(N+1)
/// matrix of `a`. Every entry of the returned block is exact.
TriMatrix production_definitional(const ExpRiordan& a);

/// Z and A for the pair (g, f), both of order N-1.
ZAPair za_sequences(const Series& g, const Series& f);

/// The n x n block P_{i,k} = (i!/k!) z_{i-k} + (i!/(k-1)!) a_{i-k+1}.
/// Needs z and a through degree n-1.
TriMatrix production_analytic(const ZAPair& za, std::size_t n);

/// (alpha, beta, gamma, delta) when `p` is exactly the Jacobi matrix of
/// the two-parameter families; std::nullopt otherwise. Requires dim >= 3.
std::optional<JacobiParams> tridiagonal_params(const TriMatrix& p);

/// The dim x dim Jacobi matrix of `params`.
TriMatrix jacobi_matrix(const JacobiParams& params, std::size_t dim);

/// U . [1/fbar', x] for f of order N, returned as its exact (N-1)x(N-1)
/// block. For a derivative-subgroup array this is the production matrix
/// of [f', f].
TriMatrix derivative_production_check(const Series& f);

}  // namespace expriordan
