#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "normcurv/algebra.hpp"

namespace normcurv {

/// Flattened Euclidean coordinates of a Hermitian matrix.
using FlatVector = Eigen::VectorXd;

/// Square matrix over R, C, H or O with entry(j, i) = conj(entry(i, j)).
///
/// Only the upper triangle is stored; the lower triangle is always read back
/// through conjugation so the Hermitian invariant cannot drift. Octonionic
/// matrices are limited to 3x3 (the Albert algebra).
class HermitianMatrix {
 public:
  HermitianMatrix(AlgebraTag tag, std::size_t size);

  static HermitianMatrix identity(AlgebraTag tag, std::size_t size);
  static HermitianMatrix diagonal(AlgebraTag tag, const std::vector<double>& diag);
  template <class Rng>
  static HermitianMatrix gaussian(AlgebraTag tag, std::size_t size, Rng& rng) {
    HermitianMatrix x(tag, size);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < size; ++i) {
      x.set_diagonal(i, normal(rng));
      for (std::size_t j = i + 1; j < size; ++j) x.set(i, j, AlgebraElement::gaussian(tag, rng));
    }
    return x;
  }

  AlgebraTag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return size_; }

  AlgebraElement entry(std::size_t i, std::size_t j) const;
  /// Sets entry (i, j) and, implicitly, its conjugate at (j, i). On the
  /// diagonal only the real part is kept.
  void set(std::size_t i, std::size_t j, const AlgebraElement& value);
  void set_diagonal(std::size_t i, double value);

  double trace() const;
  /// Frobenius norm: sqrt(sum |entry(i, j)|^2).
  double frobenius_norm() const;

  HermitianMatrix& operator+=(const HermitianMatrix& rhs);
  HermitianMatrix& operator-=(const HermitianMatrix& rhs);
  HermitianMatrix& operator*=(double s);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * size_ + j; }
  void require_compatible(const HermitianMatrix& other) const;

  AlgebraTag tag_;
  std::size_t size_;
  std::vector<AlgebraElement> upper_;  // row-major, only i <= j used
};

/// Jordan product (XY + YX) / 2 with entrywise algebra multiplication.
HermitianMatrix jordan_product(const HermitianMatrix& x, const HermitianMatrix& y);

/// Number of flat coordinates: m + a m (m - 1) / 2.
std::size_t flat_dimension(AlgebraTag tag, std::size_t size) noexcept;

/// Linear isometry onto R^D: diagonal entries first, then the a coefficients of
/// each strictly-upper entry (row-major) scaled by sqrt(2).
FlatVector flatten(const HermitianMatrix& x);
HermitianMatrix unflatten(AlgebraTag tag, std::size_t size, const FlatVector& v);

}  // namespace normcurv
