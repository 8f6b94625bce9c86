#include "normcurv/ambient.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace normcurv {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

HermitianMatrix::HermitianMatrix(AlgebraTag tag, std::size_t size)
    : tag_(tag), size_(size), upper_(size * size, AlgebraElement(tag)) {
  if (size == 0) throw std::invalid_argument("Hermitian matrix size must be positive");
  if (tag.kind == AlgebraKind::Octonion && size > 3) {
    throw std::invalid_argument("octonionic Hermitian matrices are limited to 3x3");
  }
}

HermitianMatrix HermitianMatrix::identity(AlgebraTag tag, std::size_t size) {
  HermitianMatrix x(tag, size);
  for (std::size_t i = 0; i < size; ++i) x.set_diagonal(i, 1.0);
  return x;
}

HermitianMatrix HermitianMatrix::diagonal(AlgebraTag tag, const std::vector<double>& diag) {
  HermitianMatrix x(tag, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) x.set_diagonal(i, diag[i]);
  return x;
}

AlgebraElement HermitianMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) throw std::out_of_range("Hermitian matrix index out of range");
  return i <= j ? upper_[index(i, j)] : conjugate(upper_[index(j, i)]);
}

void HermitianMatrix::set(std::size_t i, std::size_t j, const AlgebraElement& value) {
  if (i >= size_ || j >= size_) throw std::out_of_range("Hermitian matrix index out of range");
  if (value.tag() != tag_) throw AlgebraMismatch("entry tag does not match matrix tag");
  if (i == j) {
    set_diagonal(i, value.real());
  } else if (i < j) {
    upper_[index(i, j)] = value;
  } else {
    upper_[index(j, i)] = conjugate(value);
  }
}

void HermitianMatrix::set_diagonal(std::size_t i, double value) {
  upper_[index(i, i)] = AlgebraElement::scalar(tag_, value);
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < size_; ++i) t += upper_[index(i, i)].real();
  return t;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    s += upper_[index(i, i)].norm_squared();
    for (std::size_t j = i + 1; j < size_; ++j) s += 2.0 * upper_[index(i, j)].norm_squared();
  }
  return std::sqrt(s);
}

void HermitianMatrix::require_compatible(const HermitianMatrix& other) const {
  if (other.tag_ != tag_ || other.size_ != size_) {
    throw AlgebraMismatch("Hermitian matrices differ in algebra or size");
  }
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += rhs.upper_[k];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] -= rhs.upper_[k];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  for (auto& e : upper_) e *= s;
  return *this;
}

HermitianMatrix jordan_product(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.tag() != y.tag() || x.size() != y.size()) {
    throw AlgebraMismatch("jordan_product: algebra or size mismatch");
  }
  const std::size_t m = x.size();
  // Cache full entry tables so the triple loop avoids repeated conjugation.
  std::vector<AlgebraElement> xe(m * m, AlgebraElement(x.tag())), ye(m * m, AlgebraElement(x.tag()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      xe[i * m + j] = x.entry(i, j);
      ye[i * m + j] = y.entry(i, j);
    }
  }
  HermitianMatrix out(x.tag(), m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      AlgebraElement acc(x.tag());
      for (std::size_t k = 0; k < m; ++k) {
        acc += multiply(xe[i * m + k], ye[k * m + j]);
        acc += multiply(ye[i * m + k], xe[k * m + j]);
      }
      out.set(i, j, acc * 0.5);
    }
  }
  return out;
}

std::size_t flat_dimension(AlgebraTag tag, std::size_t size) noexcept {
  return size + tag.real_dim() * size * (size - 1) / 2;
}

FlatVector flatten(const HermitianMatrix& x) {
  const std::size_t m = x.size();
  const std::size_t a = x.tag().real_dim();
  FlatVector v(static_cast<Eigen::Index>(flat_dimension(x.tag(), m)));
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < m; ++i) v[k++] = x.entry(i, i).real();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const AlgebraElement e = x.entry(i, j);
      for (std::size_t c = 0; c < a; ++c) v[k++] = kSqrt2 * e[c];
    }
  }
  return v;
}

HermitianMatrix unflatten(AlgebraTag tag, std::size_t size, const FlatVector& v) {
  const std::size_t expected = flat_dimension(tag, size);
  if (static_cast<std::size_t>(v.size()) != expected) {
    throw std::invalid_argument("unflatten: expected " + std::to_string(expected) +
                                " coordinates, got " + std::to_string(v.size()));
  }
  const std::size_t a = tag.real_dim();
  HermitianMatrix x(tag, size);
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < size; ++i) x.set_diagonal(i, v[k++]);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      AlgebraElement e(tag);
      for (std::size_t c = 0; c < a; ++c) e[c] = v[k++] / kSqrt2;
      x.set(i, j, e);
    }
  }
  return x;
}

}  // namespace normcurv
