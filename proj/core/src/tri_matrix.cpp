#include "expriordan/tri_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace expriordan {

namespace {

// Highest column index allowed in row i.
std::size_t band_limit(Band band, std::size_t i) { return band == Band::lower_triangular ? i : i + 1; }

}  // namespace

TriMatrix::TriMatrix(std::size_t dim, Band band) : dim_(dim), band_(band), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("TriMatrix: dimension must be positive");
}

TriMatrix TriMatrix::identity(std::size_t dim) {
  TriMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

std::size_t TriMatrix::index(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) {
    throw std::out_of_range("TriMatrix: index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside dimension " + std::to_string(dim_));
  }
  return i * dim_ + j;
}

void TriMatrix::set(std::size_t i, std::size_t j, Rational value) {
  const std::size_t at = index(i, j);
  if (j > band_limit(band_, i) && value != 0) {
    throw std::invalid_argument("TriMatrix: nonzero entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") above the band");
  }
  entries_[at] = std::move(value);
}

TriMatrix TriMatrix::leading(std::size_t dim) const {
  if (dim > dim_) throw std::invalid_argument("TriMatrix: leading block larger than matrix");
  TriMatrix out(dim, band_);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out.entries_[i * dim + j] = (*this)(i, j);
  }
  return out;
}

std::vector<Rational> TriMatrix::row(std::size_t i) const {
  std::vector<Rational> out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) out[j] = (*this)(i, j);
  return out;
}

std::vector<Rational> TriMatrix::column(std::size_t j) const {
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool TriMatrix::is_unit_lower_triangular() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool TriMatrix::is_tridiagonal() const {
  for (std::size_t i = 2; i < dim_; ++i) {
    for (std::size_t j = 0; j + 1 < i; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool operator==(const TriMatrix& a, const TriMatrix& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

TriMatrix mat_mul(const TriMatrix& a, const TriMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  const Band band = a.band() == Band::lower_triangular && b.band() == Band::lower_triangular
                        ? Band::lower_triangular
                        : Band::lower_hessenberg;
  TriMatrix out(n, band);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k) != 0 && b(k, j) != 0) acc += a(i, k) * b(k, j);
      }
      if (acc != 0) out.set(i, j, std::move(acc));
    }
  }
  return out;
}

TriMatrix mat_inverse(const TriMatrix& a) {
  if (a.band() != Band::lower_triangular) throw std::invalid_argument("mat_inverse: matrix is not lower-triangular");
  const std::size_t n = a.dim();
  TriMatrix inv(n);
  // Column j of the inverse solves A y = e_j with y_i = 0 for i < j.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      if (a(i, i) == 0) throw std::domain_error("mat_inverse: zero on the diagonal");
      Rational acc = i == j ? 1 : 0;
      for (std::size_t k = j; k < i; ++k) {
        if (a(i, k) != 0) acc -= a(i, k) * inv(k, j);
      }
      inv.set(i, j, acc / a(i, i));
    }
  }
  return inv;
}

TriMatrix shift_apply(const TriMatrix& a) {
  const std::size_t n = a.dim();
  TriMatrix out(n, Band::lower_hessenberg);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a(i + 1, j));
  }
  return out;
}

}  // namespace expriordan
