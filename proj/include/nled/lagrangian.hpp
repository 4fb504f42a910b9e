#pragma once

#include <functional>
#include <optional>

#include "nled/field_tensor.hpp"
#include "nled/rank_four.hpp"

namespace nled {

// Quartic low-energy coefficients: L = -F/4pi + c1 F^2 + c2 G^2.
struct EHCoefficients {
  double c1 = 0.0;  // alpha^2 / (90 pi^2 m^4)
  double c2 = 0.0;  // 7 alpha^2 / (360 pi^2 m^4), i.e. (7/4) c1
  double alpha = 0.0;
  double m_e = 1.0;

  static EHCoefficients from_alpha(double alpha, double m_e);
};

enum class LagrangianKind { Maxwell, EulerHeisenberg, Custom };

// An effective Lagrangian L(F, G) represented by the values of its first and
// second derivatives at a background point. The derivative entries are
// functions of (F, G) so a single model covers every background.
class LagrangianModel {
 public:
  using Scalar2 = std::function<double(double, double)>;

  static LagrangianModel maxwell();
  // Rejects m_e <= 0; alpha must be >= 0.
  static LagrangianModel euler_heisenberg(double alpha, double m_e = 1.0);
  // Constant derivative values at the background point.
  static LagrangianModel custom_from_values(double l_f, double l_g,
                                            double l_ff, double l_gg,
                                            double l_fg);
  // Derivatives of a scalar L(F, G) by central differences with step
  // h = 1e-4 * max(1, |F|, |G|).
  static LagrangianModel custom_from_function(Scalar2 lagrangian);

  double l_f(double f, double g) const { return l_f_(f, g); }
  double l_g(double f, double g) const { return l_g_(f, g); }
  double l_ff(double f, double g) const { return l_ff_(f, g); }
  double l_gg(double f, double g) const { return l_gg_(f, g); }
  double l_fg(double f, double g) const { return l_fg_(f, g); }

  LagrangianKind kind() const { return kind_; }
  const std::optional<EHCoefficients>& eh() const { return eh_; }

 private:
  LagrangianKind kind_ = LagrangianKind::Maxwell;
  std::optional<EHCoefficients> eh_;
  Scalar2 l_f_, l_g_, l_ff_, l_gg_, l_fg_;
};

// Second derivative of the Lagrangian with respect to the field, evaluated on
// a classical background:
//
//   Omega = (1/4) L_F (eta eta - eta eta) + (1/4) L_G eps + (1/4) M,
//   M     = L_FF F(x)F + L_GG *F(x)*F + L_FG (F(x)*F + *F(x)F),
//
// in the wave-operator slot order of RankFourTensor. The Levi-Civita term is
// kept in the stored components; it is annihilated identically when both
// wave covectors are contracted in, so it never reaches the photon equation.
RankFourTensor omega_from_lagrangian(const LagrangianModel& model,
                                     const FieldTensor& background);

// Coefficient of the completely antisymmetric part, (1/4) L_G at the
// background invariants.
double omega_epsilon_coefficient(const LagrangianModel& model,
                                 const FieldTensor& background);

struct OmegaDecomposition {
  double d1 = 0.0;
  RankFourTensor delta;
};

// Splits Omega into d1 * isotropic(1) + Delta, with d1 the Frobenius
// orthogonal projection onto the isotropic direction (minimizes |Delta|_F).
// Recomposition is exact by construction. For an axially symmetric Omega the
// projection picks up half of the anisotropy coefficient: d1 = d1_axial +
// d2/2; use the trace identities with the axis when the exact axial split is
// needed.
OmegaDecomposition decompose_omega(const RankFourTensor& omega);

}  // namespace nled
