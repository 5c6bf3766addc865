#pragma once

// Jacobi elliptic functions sn, cn, dn and the complete elliptic integral of
// the first kind K(k), evaluated with the arithmetic-geometric mean and the
// descending Landen transformation. Modulus convention: k (not m = k^2).

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "kdv/errors.hpp"

namespace kdv {

/// Elliptic modulus k with 0 <= k <= 1.
template <typename Scalar>
class EllipticModulus {
 public:
  explicit EllipticModulus(Scalar k) : k_(k) {
    if (!(k >= Scalar(0) && k <= Scalar(1))) {
      throw DomainError("elliptic modulus must lie in [0, 1]", static_cast<double>(k));
    }
  }
  Scalar value() const { return k_; }
  /// Complementary modulus sqrt(1 - k^2), computed without cancellation.
  Scalar complement() const { return std::sqrt((Scalar(1) - k_) * (Scalar(1) + k_)); }

 private:
  Scalar k_;
};

template <typename Scalar>
struct JacobiTriple {
  Scalar sn;
  Scalar cn;
  Scalar dn;
};

namespace detail {

template <typename Scalar>
constexpr Scalar agm_tolerance() {
  return 8 * std::numeric_limits<Scalar>::epsilon();
}

/// Moduli closer than this to 1 use the hyperbolic closed forms.
template <typename Scalar>
constexpr Scalar degenerate_gap() {
  return Scalar(1e-12);
}

}  // namespace detail

/// Complete elliptic integral of the first kind. Diverges at k = 1.
template <typename Scalar>
Scalar complete_K(EllipticModulus<Scalar> modulus) {
  if (modulus.value() >= Scalar(1)) {
    throw DomainError("complete_K diverges at k = 1", static_cast<double>(modulus.value()));
  }
  Scalar a = 1;
  Scalar b = modulus.complement();
  for (int iter = 0; iter < 64 && std::abs(a - b) > detail::agm_tolerance<Scalar>() * a; ++iter) {
    const Scalar next_a = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next_a;
  }
  return std::numbers::pi_v<Scalar> / (2 * a);
}

template <typename Scalar>
Scalar complete_K(Scalar k) {
  return complete_K(EllipticModulus<Scalar>(k));
}

/// sn, cn and dn at a common argument.
template <typename Scalar>
JacobiTriple<Scalar> jacobi_sncndn(Scalar u, EllipticModulus<Scalar> modulus) {
  const Scalar k = modulus.value();
  if (Scalar(1) - k <= detail::degenerate_gap<Scalar>()) {
    const Scalar sech = Scalar(1) / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }

  // Reduce modulo the real period 4K.
  const Scalar period = 4 * complete_K(modulus);
  const Scalar reduced = u - period * std::round(u / period);

  constexpr int max_levels = 32;
  std::array<Scalar, max_levels + 1> a{};
  std::array<Scalar, max_levels + 1> c{};
  a[0] = 1;
  Scalar b = modulus.complement();
  c[0] = k;
  int levels = 0;
  while (levels < max_levels && std::abs(c[levels]) > detail::agm_tolerance<Scalar>() * a[levels]) {
    a[levels + 1] = (a[levels] + b) / 2;
    c[levels + 1] = (a[levels] - b) / 2;
    b = std::sqrt(a[levels] * b);
    ++levels;
  }

  Scalar phi = std::ldexp(a[levels] * reduced, levels);
  Scalar previous = phi;
  for (int n = levels; n > 0; --n) {
    previous = phi;
    phi = (phi + std::asin(c[n] / a[n] * std::sin(phi))) / 2;
  }
  const Scalar s = std::sin(phi);
  const Scalar cphi = std::cos(phi);
  const Scalar dn = levels > 0 ? cphi / std::cos(previous - phi) : Scalar(1);
  return {s, cphi, dn};
}

template <typename Scalar>
Scalar jacobi_cn(Scalar u, EllipticModulus<Scalar> modulus) {
  return jacobi_sncndn(u, modulus).cn;
}

template <typename Scalar>
Scalar jacobi_sn(Scalar u, EllipticModulus<Scalar> modulus) {
  return jacobi_sncndn(u, modulus).sn;
}

template <typename Scalar>
Scalar jacobi_cn(Scalar u, Scalar k) {
  return jacobi_cn(u, EllipticModulus<Scalar>(k));
}

template <typename Scalar>
Scalar jacobi_sn(Scalar u, Scalar k) {
  return jacobi_sn(u, EllipticModulus<Scalar>(k));
}

}  // namespace kdv
