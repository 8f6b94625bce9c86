#include "normcurv/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normcurv {

namespace {

void conj_into(const double* x, double* out, std::size_t n) {
  out[0] = x[0];
  for (std::size_t i = 1; i < n; ++i) out[i] = -x[i];
}

// Recursive Cayley-Dickson doubling on raw coefficient blocks of length n.
void cd_mul(const double* x, const double* y, double* out, std::size_t n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  const double* a = x;
  const double* b = x + h;
  const double* c = y;
  const double* d = y + h;

  std::array<double, 4> conj_c{}, conj_d{}, t1{}, t2{};
  conj_into(c, conj_c.data(), h);
  conj_into(d, conj_d.data(), h);

  // first half: a c - conj(d) b
  cd_mul(a, c, t1.data(), h);
  cd_mul(conj_d.data(), b, t2.data(), h);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

  // second half: d a + b conj(c)
  cd_mul(d, a, t1.data(), h);
  cd_mul(b, conj_c.data(), t2.data(), h);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

void require_same(AlgebraTag a, AlgebraTag b) {
  if (a != b) {
    throw AlgebraMismatch(std::string("algebra tag mismatch: ") + std::string(algebra_name(a)) +
                          " vs " + std::string(algebra_name(b)));
  }
}

}  // namespace

char algebra_letter(AlgebraTag tag) noexcept {
  switch (tag.kind) {
    case AlgebraKind::Real: return 'R';
    case AlgebraKind::Complex: return 'C';
    case AlgebraKind::Quaternion: return 'H';
    case AlgebraKind::Octonion: return 'O';
  }
  return '?';
}

AlgebraTag algebra_from_letter(char letter) {
  switch (letter) {
    case 'R': return AlgebraTag::real();
    case 'C': return AlgebraTag::complex();
    case 'H': return AlgebraTag::quaternion();
    case 'O': return AlgebraTag::octonion();
    default: break;
  }
  throw std::invalid_argument(std::string("unknown algebra letter '") + letter + "'");
}

std::string_view algebra_name(AlgebraTag tag) noexcept {
  switch (tag.kind) {
    case AlgebraKind::Real: return "real";
    case AlgebraKind::Complex: return "complex";
    case AlgebraKind::Quaternion: return "quaternion";
    case AlgebraKind::Octonion: return "octonion";
  }
  return "unknown";
}

AlgebraElement::AlgebraElement(AlgebraTag tag, std::span<const double> coeffs) : tag_(tag) {
  if (coeffs.size() != tag.real_dim()) {
    throw std::invalid_argument("coefficient count " + std::to_string(coeffs.size()) +
                                " does not match algebra dimension " +
                                std::to_string(tag.real_dim()));
  }
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

AlgebraElement AlgebraElement::scalar(AlgebraTag tag, double value) {
  AlgebraElement x(tag);
  x.c_[0] = value;
  return x;
}

AlgebraElement AlgebraElement::unit(AlgebraTag tag, std::size_t index) {
  if (index >= tag.real_dim()) throw std::out_of_range("basis index out of range");
  AlgebraElement x(tag);
  x.c_[index] = 1.0;
  return x;
}

double AlgebraElement::norm_squared() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += c_[i] * c_[i];
  return s;
}

double AlgebraElement::norm() const noexcept { return std::sqrt(norm_squared()); }

double AlgebraElement::imag_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 1; i < dim(); ++i) s += c_[i] * c_[i];
  return std::sqrt(s);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same(tag_, rhs.tag_);
  for (std::size_t i = 0; i < dim(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same(tag_, rhs.tag_);
  for (std::size_t i = 0; i < dim(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < dim(); ++i) c_[i] *= s;
  return *this;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.tag(), y.tag());
  std::array<double, 8> out{};
  cd_mul(x.coeffs().data(), y.coeffs().data(), out.data(), x.dim());
  return AlgebraElement(x.tag(), std::span<const double>(out.data(), x.dim()));
}

AlgebraElement conjugate(const AlgebraElement& x) noexcept {
  AlgebraElement r = x;
  for (std::size_t i = 1; i < x.dim(); ++i) r[i] = -x[i];
  return r;
}

double real_inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.tag(), y.tag());
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

}  // namespace normcurv
