#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>

namespace normcurv {

/// The four normed division algebras, tagged by their real dimension.
enum class AlgebraKind { Real, Complex, Quaternion, Octonion };

struct AlgebraTag {
  AlgebraKind kind = AlgebraKind::Real;

  constexpr std::size_t real_dim() const noexcept {
    switch (kind) {
      case AlgebraKind::Real: return 1;
      case AlgebraKind::Complex: return 2;
      case AlgebraKind::Quaternion: return 4;
      case AlgebraKind::Octonion: return 8;
    }
    return 0;
  }

  constexpr bool associative() const noexcept { return kind != AlgebraKind::Octonion; }

  constexpr bool operator==(const AlgebraTag&) const = default;

  static constexpr AlgebraTag real() { return {AlgebraKind::Real}; }
  static constexpr AlgebraTag complex() { return {AlgebraKind::Complex}; }
  static constexpr AlgebraTag quaternion() { return {AlgebraKind::Quaternion}; }
  static constexpr AlgebraTag octonion() { return {AlgebraKind::Octonion}; }
};

/// One-letter field symbol used in space names: R, C, H, O.
char algebra_letter(AlgebraTag tag) noexcept;
AlgebraTag algebra_from_letter(char letter);
std::string_view algebra_name(AlgebraTag tag) noexcept;

struct AlgebraMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Element of R, C, H or O stored in the basis order (1, e1, ..., e7).
/// Coefficients past real_dim() are always zero.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraTag tag) : tag_(tag) {}
  AlgebraElement(AlgebraTag tag, std::span<const double> coeffs);

  static AlgebraElement scalar(AlgebraTag tag, double value);
  /// Basis unit e_index (index 0 is the identity).
  static AlgebraElement unit(AlgebraTag tag, std::size_t index);
  /// Coefficients drawn i.i.d. from N(0, 1).
  template <class Rng>
  static AlgebraElement gaussian(AlgebraTag tag, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    AlgebraElement x(tag);
    for (std::size_t i = 0; i < tag.real_dim(); ++i) x.c_[i] = normal(rng);
    return x;
  }

  AlgebraTag tag() const noexcept { return tag_; }
  std::size_t dim() const noexcept { return tag_.real_dim(); }
  std::span<const double> coeffs() const noexcept { return {c_.data(), dim()}; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }

  double real() const noexcept { return c_[0]; }
  double norm_squared() const noexcept;
  double norm() const noexcept;
  /// Norm of the imaginary part.
  double imag_norm() const noexcept;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(double s) noexcept;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
  friend AlgebraElement operator*(AlgebraElement a, double s) noexcept { return a *= s; }
  friend AlgebraElement operator*(double s, AlgebraElement a) noexcept { return a *= s; }

  bool operator==(const AlgebraElement&) const = default;

 private:
  AlgebraTag tag_{};
  std::array<double, 8> c_{};
};

/// Cayley-Dickson product (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
/// Throws AlgebraMismatch when the tags differ.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conjugate(const AlgebraElement& x) noexcept;

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  return multiply(x, y);
}

/// Real part of x * conj(y), i.e. the Euclidean inner product of coefficients.
double real_inner(const AlgebraElement& x, const AlgebraElement& y);

/// (xy)z - x(yz)
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

}  // namespace normcurv
