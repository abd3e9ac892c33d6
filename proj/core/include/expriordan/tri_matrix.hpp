#pragma once

#include <cstddef>
#include <vector>

#include "expriordan/rational.hpp"

namespace expriordan {

enum class Band {
  lower_triangular,  // zero above the diagonal
  lower_hessenberg,  // zero above the first superdiagonal
};

/// Dense square matrix of Rationals that is zero above its band.
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t dim, Band band = Band::lower_triangular);

  static TriMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Band band() const { return band_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

  /// Throws std::out_of_range for indices outside the matrix and
  /// std::invalid_argument for a nonzero value above the band.
  void set(std::size_t i, std::size_t j, Rational value);

  /// Leading dim x dim block.
  TriMatrix leading(std::size_t dim) const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;

  bool is_unit_lower_triangular() const;
  /// True when nothing below the first subdiagonal is nonzero. Only
  /// meaningful for Hessenberg matrices.
  bool is_tridiagonal() const;

  /// Entry-wise comparison; the band tag is not compared.
  friend bool operator==(const TriMatrix& a, const TriMatrix& b);

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  Band band_;
  std::vector<Rational> entries_;
};

/// Exact product. Throws std::invalid_argument on a dimension mismatch or
/// when the product leaves the lower-Hessenberg band.
TriMatrix mat_mul(const TriMatrix& a, const TriMatrix& b);

/// Inverse of a lower-triangular matrix by forward substitution. Throws
/// std::invalid_argument for Hessenberg input and std::domain_error for a
/// zero on the diagonal.
TriMatrix mat_inverse(const TriMatrix& a);

/// U * A with U the shift matrix: row i of the result is row i+1 of A and
/// the last row is zero.
TriMatrix shift_apply(const TriMatrix& a);

}  // namespace expriordan
