#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expriordan/orthopoly.hpp"
#include "expriordan/production.hpp"
#include "expriordan/rational.hpp"
#include "expriordan/riordan.hpp"
#include "expriordan/series.hpp"
#include "expriordan/tri_matrix.hpp"

// Text, JSON and CSV renderings. Rationals are always written as "p/q"
// strings (integers as "p") so exact values survive a round trip.
namespace expriordan {

enum class OutputFormat { text, json, csv };

/// "text", "json" or "csv"; std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

struct NamedMatrix {
  std::string name;
  TriMatrix matrix;
};

/// {"name": ..., "order": dim-1, "rows": [["p/q", ...], ...]}
std::string matrix_to_json(const TriMatrix& m, std::string_view name);
/// Inverse of matrix_to_json. The band is inferred from the entries.
/// Throws std::invalid_argument on schema violations.
NamedMatrix matrix_from_json(std::string_view text);
/// Right-aligned columns, one row per line.
std::string matrix_to_text(const TriMatrix& m);
/// Header "n,k0,k1,..." then one line per row.
std::string matrix_to_csv(const TriMatrix& m);

std::string sequence_to_json(std::span<const Rational> seq);
std::vector<Rational> sequence_from_json(std::string_view text);
std::string sequence_to_text(std::span<const Rational> seq);
/// Header "n,value".
std::string sequence_to_csv(std::span<const Rational> seq);

/// {"b": [...], "lambda": [...]}
std::string recurrence_to_json(const Recurrence& r);
Recurrence recurrence_from_json(std::string_view text);

/// {"alpha": ..., "beta": ..., "gamma": ..., "delta": ...}
std::string params_to_json(const JacobiParams& p);
JacobiParams params_from_json(std::string_view text);
/// "(alpha, beta, gamma, delta) = (0, -2, 0, -1)"
std::string params_to_text(const JacobiParams& p);

/// Human-readable polynomial in descending powers, e.g. "x^4 - 20x^2 + 24".
std::string polynomial_to_text(std::span<const Rational> coeffs);

}  // namespace expriordan
