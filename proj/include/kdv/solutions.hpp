#pragma once

// Exact solutions of u_t + u u_x + u_xxx = 0 and the action of its point
// symmetry group (dilation, Galilean boost, translations, reflection).

#include <string>
#include <variant>

namespace kdv {

/// Element of the symmetry group. Acting on a solution u it produces
///   u~(t, x) = e^{-2d} u(T, X) + v,
///   T = e^{-3d} (t - t0),  X = e^{-d} (x - x0 - v (t - t0)),
/// where, when `reflect` is set, u is first replaced by u(-t, -x).
struct GroupElement {
  double d = 0.0;
  double v = 0.0;
  double t0 = 0.0;
  double x0 = 0.0;
  bool reflect = false;

  static GroupElement identity() { return {}; }
  static GroupElement boost(double velocity) { return {0.0, velocity, 0.0, 0.0, false}; }
  static GroupElement shift(double dt, double dx) { return {0.0, 0.0, dt, dx, false}; }
  static GroupElement dilation(double d) { return {d, 0.0, 0.0, 0.0, false}; }
  static GroupElement reflection() { return {0.0, 0.0, 0.0, 0.0, true}; }
};

/// The element acting as `first` followed by `second`.
GroupElement compose(const GroupElement& second, const GroupElement& first);

namespace solution {

/// u = A.
struct Constant {
  double A;
};
/// u = (x - x0) / (t - t0); singular at t = t0.
struct GalileanRamp {
  double t0;
  double x0;
};
/// Dilation-invariant rational solutions, order in {0, -1, -2, -3}.
struct Rational {
  int order;
};
/// u = (a + v) cn^2(omega (x - v t), k), k^2 = (a + v)/(2a - v),
/// omega = sqrt((2a - v)/3) / 2.
struct CnoidalBoosted {
  double a;
  double v;
};
/// u = 3v sech^2(sqrt(v)/2 (x - v t)).
struct SolitonBoosted {
  double v;
};
/// Stationary soliton on a negative background:
/// u = -a/2 + 3a/2 sech^2(sqrt(a/2)/2 x).
struct Soliton {
  double a;
};
/// u = a - (a - c) / sn^2(omega x, k).
struct SingularSnoidal {
  double a;
  double c;
};
/// u = -a/2 (1 + 3 / sinh^2(omega x)).
struct SingularSoliton {
  double a;
};
/// u = a - 3a / sin^2(omega x).
struct SingularTrig {
  double a;
};
/// u = -12 / (x - v t)^2 + v.
struct AlgebraicSolitonBoosted {
  double v;
};
/// Real wave for one real root a and a complex pair -a/2 +- iq:
/// u = a - A (1 + cn)/(1 - cn).
struct ComplexRootWave {
  double a;
  double q;
};
/// Two-soliton u = 12 d_xx ln tau + c evaluated at x~ = x - c t with
/// tau = 1 + B1 E1 + B2 E2 + A B1 B2 E1 E2,  E_j = exp(-(alpha_j x~ - alpha_j^3 t)),
/// A = ((alpha1 - alpha2)/(alpha1 + alpha2))^2.
struct DoubleSoliton {
  double alpha1;
  double alpha2;
  double B1;
  double B2;
  double frame_speed;
};

}  // namespace solution

using KdvSolution =
    std::variant<solution::Constant, solution::GalileanRamp, solution::Rational,
                 solution::CnoidalBoosted, solution::SolitonBoosted, solution::Soliton,
                 solution::SingularSnoidal, solution::SingularSoliton, solution::SingularTrig,
                 solution::AlgebraicSolitonBoosted, solution::ComplexRootWave,
                 solution::DoubleSoliton>;

/// Throws DomainError when the variant's parameter invariants do not hold.
void validate(const KdvSolution& sol);

/// Short identifier of the variant ("cnoidal_boosted", ...).
std::string variant_name(const KdvSolution& sol);

/// True for variants that blow up somewhere on the real line.
bool is_singular(const KdvSolution& sol);

/// Spatial period of a cnoidal wave, 2 K(k) / omega.
double spatial_period(const solution::CnoidalBoosted& wave);

/// Exact value at (t, x). Throws DomainError within the singularity guard.
template <typename Scalar>
Scalar evaluate(const KdvSolution& sol, Scalar t, Scalar x);

/// A catalog member together with a group element acting on it.
class ExactSolution {
 public:
  ExactSolution(KdvSolution base, GroupElement action = GroupElement::identity())
      : base_(std::move(base)), action_(action) {
    validate(base_);
  }

  template <typename Scalar>
  Scalar operator()(Scalar t, Scalar x) const;

  const KdvSolution& base() const { return base_; }
  const GroupElement& action() const { return action_; }

 private:
  KdvSolution base_;
  GroupElement action_;
};

ExactSolution transform(const ExactSolution& sol, const GroupElement& g);
ExactSolution transform(const KdvSolution& sol, const GroupElement& g);

/// Centered-difference residual of u_t + u u_x + u_xxx at (t, x), evaluated in
/// extended precision. Second order in h_t, fourth order in h_x.
double residual(const ExactSolution& sol, double t, double x, double h_t, double h_x);

}  // namespace kdv
