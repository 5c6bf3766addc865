#include "kdv/solutions.hpp"

#include <array>
#include <cmath>
#include <type_traits>

#include "kdv/elliptic.hpp"
#include "kdv/errors.hpp"

namespace kdv {

namespace {

constexpr double singular_guard = 1e-8;

template <class>
inline constexpr bool always_false = false;

template <typename Scalar>
void guard(Scalar denominator, Scalar location) {
  if (std::abs(denominator) < Scalar(singular_guard)) {
    throw DomainError("evaluation at a singular point", static_cast<double>(location));
  }
}

template <typename Scalar>
Scalar sech2(Scalar z) {
  const Scalar s = Scalar(1) / std::cosh(z);
  return s * s;
}

template <typename Scalar>
Scalar eval_rational(int order, Scalar t, Scalar x) {
  switch (order) {
    case 0:
      return 0;
    case -1:
      guard(x, x);
      return Scalar(-12) / (x * x);
    case -2: {
      // 12 d_xx ln(x^3 + 12 t)
      const Scalar den = x * x * x + 12 * t;
      guard(den, x);
      return 36 * x * (24 * t - x * x * x) / (den * den);
    }
    case -3: {
      const Scalar x3 = x * x * x;
      const Scalar den = 720 * t * t - 60 * x3 * t - x3 * x3;
      guard(den, x);
      return Scalar(-72) * (x3 * x3 * x3 + 5400 * x3 * t * t + 43200 * t * t * t) * x /
             (den * den);
    }
    default:
      throw DomainError("rational solution order must be 0, -1, -2 or -3", order);
  }
}

template <typename Scalar>
Scalar eval_double_soliton(const solution::DoubleSoliton& p, Scalar t, Scalar x) {
  // Terms of tau as weight * exp(K x~ + const); scale by the largest exponent
  // and use tau tau_xx - tau_x^2 = sum_{i<j} w_i w_j (K_i - K_j)^2.
  const Scalar xs = x - Scalar(p.frame_speed) * t;
  const Scalar a1 = p.alpha1;
  const Scalar a2 = p.alpha2;
  const Scalar coupling = ((a1 - a2) / (a1 + a2)) * ((a1 - a2) / (a1 + a2));
  const Scalar eta1 = -(a1 * xs - a1 * a1 * a1 * t);
  const Scalar eta2 = -(a2 * xs - a2 * a2 * a2 * t);

  std::array<Scalar, 4> coef{Scalar(1), Scalar(p.B1), Scalar(p.B2), coupling * p.B1 * p.B2};
  std::array<Scalar, 4> expo{Scalar(0), eta1, eta2, eta1 + eta2};
  std::array<Scalar, 4> wave{Scalar(0), -a1, -a2, -a1 - a2};

  Scalar top = 0;
  bool any = false;
  for (int j = 0; j < 4; ++j) {
    if (coef[j] == Scalar(0)) continue;
    const Scalar e = expo[j] + std::log(std::abs(coef[j]));
    if (!any || e > top) top = e;
    any = true;
  }
  std::array<Scalar, 4> w{};
  Scalar tau = 0;
  for (int j = 0; j < 4; ++j) {
    if (coef[j] == Scalar(0)) continue;
    const Scalar sign = coef[j] < 0 ? Scalar(-1) : Scalar(1);
    w[j] = sign * std::exp(expo[j] + std::log(std::abs(coef[j])) - top);
    tau += w[j];
  }
  guard(tau, x);
  Scalar num = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Scalar dk = wave[i] - wave[j];
      num += w[i] * w[j] * dk * dk;
    }
  }
  return 12 * num / (tau * tau) + Scalar(p.frame_speed);
}

template <typename Scalar>
Scalar eval_base(const KdvSolution& sol, Scalar t, Scalar x) {
  return std::visit(
      [&](const auto& p) -> Scalar {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, solution::Constant>) {
          return Scalar(p.A);
        } else if constexpr (std::is_same_v<T, solution::GalileanRamp>) {
          const Scalar dt = t - Scalar(p.t0);
          guard(dt, Scalar(p.t0));
          return (x - Scalar(p.x0)) / dt;
        } else if constexpr (std::is_same_v<T, solution::Rational>) {
          return eval_rational(p.order, t, x);
        } else if constexpr (std::is_same_v<T, solution::CnoidalBoosted>) {
          const Scalar a = p.a;
          const Scalar v = p.v;
          const Scalar k = std::sqrt((a + v) / (2 * a - v));
          const Scalar omega = std::sqrt((2 * a - v) / 3) / 2;
          const Scalar c = jacobi_cn(omega * (x - v * t), EllipticModulus<Scalar>(std::min(k, Scalar(1))));
          return (a + v) * c * c;
        } else if constexpr (std::is_same_v<T, solution::SolitonBoosted>) {
          const Scalar v = p.v;
          return 3 * v * sech2(std::sqrt(v) / 2 * (x - v * t));
        } else if constexpr (std::is_same_v<T, solution::Soliton>) {
          const Scalar a = p.a;
          return -a / 2 + 3 * a / 2 * sech2(std::sqrt(a / 2) / 2 * x);
        } else if constexpr (std::is_same_v<T, solution::SingularSnoidal>) {
          const Scalar a = p.a;
          const Scalar c = p.c;
          const Scalar k = std::sqrt((2 * a + c) / (a - c));
          const Scalar omega = std::sqrt((a - c) / 3) / 2;
          const Scalar s = jacobi_sn(omega * x, EllipticModulus<Scalar>(std::min(k, Scalar(1))));
          guard(s, x);
          return a - (a - c) / (s * s);
        } else if constexpr (std::is_same_v<T, solution::SingularSoliton>) {
          const Scalar a = p.a;
          const Scalar s = std::sinh(std::sqrt(a / 2) / 2 * x);
          guard(s, x);
          return -a / 2 * (1 + 3 / (s * s));
        } else if constexpr (std::is_same_v<T, solution::SingularTrig>) {
          const Scalar a = p.a;
          const Scalar s = std::sin(std::sqrt(a) / 2 * x);
          guard(s, x);
          return a - 3 * a / (s * s);
        } else if constexpr (std::is_same_v<T, solution::AlgebraicSolitonBoosted>) {
          const Scalar v = p.v;
          const Scalar z = x - v * t;
          guard(z, v * t);
          return Scalar(-12) / (z * z) + v;
        } else if constexpr (std::is_same_v<T, solution::ComplexRootWave>) {
          const Scalar a = p.a;
          const Scalar q = p.q;
          const Scalar A = std::sqrt(Scalar(9) / 4 * a * a + q * q);
          const Scalar omega = std::sqrt(A / 3);
          const Scalar k = std::sqrt((A + Scalar(3) / 2 * a) / (2 * A));
          const Scalar c = jacobi_cn(omega * x, EllipticModulus<Scalar>(std::min(k, Scalar(1))));
          guard(Scalar(1) - c, x);
          return a - A * (1 + c) / (1 - c);
        } else if constexpr (std::is_same_v<T, solution::DoubleSoliton>) {
          return eval_double_soliton(p, t, x);
        } else {
          static_assert(always_false<T>, "unhandled solution variant");
        }
      },
      sol);
}

}  // namespace

GroupElement compose(const GroupElement& second, const GroupElement& first) {
  // Moving the reflection of `second` past `first` flips first's translations.
  GroupElement f = first;
  if (second.reflect) {
    f.t0 = -f.t0;
    f.x0 = -f.x0;
  }
  const GroupElement& g = second;
  GroupElement out;
  out.d = f.d + g.d;
  out.v = g.v + std::exp(-2 * g.d) * f.v;
  out.t0 = g.t0 + std::exp(3 * g.d) * f.t0;
  out.x0 = g.x0 + std::exp(g.d) * f.x0 + g.v * std::exp(3 * g.d) * f.t0;
  out.reflect = first.reflect != second.reflect;
  return out;
}

void validate(const KdvSolution& sol) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, solution::Rational>) {
          if (p.order > 0 || p.order < -3) {
            throw DomainError("rational solution order must be 0, -1, -2 or -3", p.order);
          }
        } else if constexpr (std::is_same_v<T, solution::CnoidalBoosted>) {
          if (!(2 * p.a - p.v > 0)) throw DomainError("cnoidal wave needs 2a - v > 0", p.v);
          const double k2 = (p.a + p.v) / (2 * p.a - p.v);
          if (!(k2 >= 0 && k2 <= 1)) throw DomainError("cnoidal modulus outside [0, 1]", k2);
        } else if constexpr (std::is_same_v<T, solution::SolitonBoosted>) {
          if (!(p.v > 0)) throw DomainError("soliton speed must be positive", p.v);
        } else if constexpr (std::is_same_v<T, solution::Soliton>) {
          if (!(p.a > 0)) throw DomainError("soliton parameter must be positive", p.a);
        } else if constexpr (std::is_same_v<T, solution::SingularSnoidal>) {
          if (!(p.a > p.c)) throw DomainError("snoidal wave needs a > c", p.c);
          const double k2 = (2 * p.a + p.c) / (p.a - p.c);
          if (!(k2 >= 0 && k2 <= 1)) throw DomainError("snoidal modulus outside [0, 1]", k2);
        } else if constexpr (std::is_same_v<T, solution::SingularSoliton> ||
                             std::is_same_v<T, solution::SingularTrig>) {
          if (!(p.a > 0)) throw DomainError("parameter a must be positive", p.a);
        } else if constexpr (std::is_same_v<T, solution::ComplexRootWave>) {
          if (!(p.q > 0)) throw DomainError("complex root wave needs q > 0", p.q);
        } else if constexpr (std::is_same_v<T, solution::DoubleSoliton>) {
          if (p.alpha1 + p.alpha2 == 0.0) {
            throw DomainError("double soliton needs alpha1 + alpha2 != 0", p.alpha1);
          }
        }
      },
      sol);
}

std::string variant_name(const KdvSolution& sol) {
  static const std::array<const char*, std::variant_size_v<KdvSolution>> names{
      "constant",        "galilean_ramp",    "rational",          "cnoidal_boosted",
      "soliton_boosted", "soliton",          "singular_snoidal",  "singular_soliton",
      "singular_trig",   "algebraic_soliton", "complex_root_wave", "double_soliton"};
  return names[sol.index()];
}

bool is_singular(const KdvSolution& sol) {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, solution::Rational>) {
          return p.order != 0;
        } else {
          return std::is_same_v<T, solution::GalileanRamp> ||
                 std::is_same_v<T, solution::SingularSnoidal> ||
                 std::is_same_v<T, solution::SingularSoliton> ||
                 std::is_same_v<T, solution::SingularTrig> ||
                 std::is_same_v<T, solution::AlgebraicSolitonBoosted> ||
                 std::is_same_v<T, solution::ComplexRootWave>;
        }
      },
      sol);
}

double spatial_period(const solution::CnoidalBoosted& wave) {
  validate(wave);
  const double k = std::sqrt((wave.a + wave.v) / (2 * wave.a - wave.v));
  const double omega = std::sqrt((2 * wave.a - wave.v) / 3) / 2;
  return 2 * complete_K(k) / omega;
}

template <typename Scalar>
Scalar evaluate(const KdvSolution& sol, Scalar t, Scalar x) {
  return eval_base(sol, t, x);
}

template <typename Scalar>
Scalar ExactSolution::operator()(Scalar t, Scalar x) const {
  const GroupElement& g = action_;
  const Scalar dt = t - Scalar(g.t0);
  Scalar T = std::exp(Scalar(-3) * Scalar(g.d)) * dt;
  Scalar X = std::exp(-Scalar(g.d)) * (x - Scalar(g.x0) - Scalar(g.v) * dt);
  if (g.reflect) {
    T = -T;
    X = -X;
  }
  return std::exp(Scalar(-2) * Scalar(g.d)) * eval_base(base_, T, X) + Scalar(g.v);
}

template double evaluate<double>(const KdvSolution&, double, double);
template long double evaluate<long double>(const KdvSolution&, long double, long double);
template double ExactSolution::operator()<double>(double, double) const;
template long double ExactSolution::operator()<long double>(long double, long double) const;

ExactSolution transform(const ExactSolution& sol, const GroupElement& g) {
  return ExactSolution(sol.base(), compose(g, sol.action()));
}

ExactSolution transform(const KdvSolution& sol, const GroupElement& g) {
  return ExactSolution(sol, g);
}

double residual(const ExactSolution& sol, double t, double x, double h_t, double h_x) {
  using L = long double;
  const L tt = t;
  const L xx = x;
  const L ht = h_t;
  const L hx = h_x;
  auto u = [&](L dt, int k) { return sol(tt + dt, xx + k * hx); };

  const L u0 = u(0, 0);
  const L ut = (u(ht, 0) - u(-ht, 0)) / (2 * ht);
  const L um1 = u(0, -1), up1 = u(0, 1), um2 = u(0, -2), up2 = u(0, 2);
  const L um3 = u(0, -3), up3 = u(0, 3);
  const L ux = (um2 - 8 * um1 + 8 * up1 - up2) / (12 * hx);
  const L uxxx = (um3 - 8 * um2 + 13 * um1 - 13 * up1 + 8 * up2 - up3) / (8 * hx * hx * hx);
  return static_cast<double>(ut + u0 * ux + uxxx);
}

}  // namespace kdv
