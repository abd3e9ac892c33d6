#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "expriordan/production.hpp"
#include "expriordan/series.hpp"
#include "expriordan/tri_matrix.hpp"

namespace expriordan {

/// Monic three-term recurrence
///   P_0 = 1,  P_1 = x - b_0,  P_n = (x - b_{n-1}) P_{n-1} - lambda_{n-1} P_{n-2}.
/// `lambda[0]` holds lambda_1.
struct Recurrence {
  std::vector<Rational> b;
  std::vector<Rational> lambda;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// b_0..b_{n-1} and lambda_1..lambda_{n-1} of a Jacobi matrix.
Recurrence recurrence_from(const JacobiParams& params, std::size_t n);

struct MomentSequence {
  std::vector<Rational> m;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Rows 0..n hold the coefficients of P_0..P_n. Throws
/// std::invalid_argument when the recurrence is too short.
TriMatrix coefficient_array(const Recurrence& r, std::size_t n);

/// m_0..m_n, the first column of the inverse coefficient array.
MomentSequence moments(const Recurrence& r, std::size_t n);

/// det(m_{i+j})_{0<=i,j<=n} by fraction-free (Bareiss) elimination with row
/// pivoting. Needs 2n+1 terms.
Rational hankel(std::span<const Rational> seq, std::size_t n);

/// h_0..h_n.
std::vector<Rational> hankel_transform(std::span<const Rational> seq, std::size_t n);

/// Closed product formulas for Hankel transforms of catalog expansions.
enum class HankelFormula {
  sech_squared,         // EGF of sech^2(x)
  sec_squared_moments,  // EGF of sec^2(x)
  tanh,                 // EGF of tanh(x)
};

/// Accepts "sech2", "sec2" and "tanh"; throws std::invalid_argument
/// otherwise.
HankelFormula parse_hankel_formula(std::string_view id);

/// The closed-form value of h_n.
Rational hankel_formula_value(HankelFormula kind, std::size_t n);

/// The sequence whose transform the formula describes, m_0..m_len-1.
std::vector<Rational> hankel_formula_sequence(HankelFormula kind, std::size_t len);

/// Compares the closed form against the determinants for h_0..h_n.
bool hankel_formula_check(HankelFormula kind, std::size_t n);

/// Peels (b_k, lambda_{k+1}) for k < depth off the ordinary generating
/// function of `m` by repeated reciprocals. Requires m_0 = 1 and
/// 2 depth + 1 terms. Throws std::domain_error when some lambda_k with
/// k < depth vanishes (the fraction terminates early).
Recurrence jfraction(std::span<const Rational> m, std::size_t depth);

/// Ordinary generating function of the J-fraction with levels 0..depth-1,
/// 1 / (1 - b_0 x - lambda_1 x^2 / (1 - b_1 x - ...)), truncated at
/// `order`. Matches the full fraction through x^{2 depth - 1}.
Series cf_to_ogf(const Recurrence& r, std::size_t depth, std::size_t order);

}  // namespace expriordan
