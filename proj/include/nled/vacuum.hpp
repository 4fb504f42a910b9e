#pragma once

#include "nled/effective_metric.hpp"
#include "nled/lagrangian.hpp"
#include "nled/rank_four.hpp"

namespace nled {

// Isotropic wave-operator coefficient of the Maxwell vacuum, -1/(16 pi).
// Kept exact at lowest order; the O(alpha^2) correction is dropped.
double maxwell_d1();

// Ground state of the field between perfectly conducting plates a apart,
// with a measured in units of 1/m_e and the plate normal a unit spacelike
// vector (default z).
struct CasimirVacuum {
  double separation = 1.0;
  double alpha = 0.0;
  FourVector normal = unit_normal_z();

  CasimirVacuum(double separation, double alpha,
                FourVector normal = unit_normal_z());
};

// Symmetric stress tensor T_{mu nu}, diagonal in the plate-adapted frame and
// traceless.
struct StressTensor {
  Mat4 t_lower = Mat4::Zero();

  double t00() const { return t_lower(0, 0); }
  double trace() const;  // T^mu_mu
};

// T_00 = -pi^2 / (720 a^4), T_zz = 3 T_00, T_xx = T_yy = -T_00.
StressTensor casimir_stress(const CasimirVacuum& vac);

// Closed-form anisotropy coefficient d2 = -11 pi alpha^2 / (64800 a^4),
// position independent at this order.
double casimir_d2(const CasimirVacuum& vac);

// The same coefficient through the stress tensor, two equivalent routes.
// c_sum = c1 + c2 for the quartic model in use.
double d2_from_tzz(double c_sum, const StressTensor& t, const FourVector& n);
double d2_from_t00(double c_sum, const StressTensor& t);

// d2 for a general quartic model between the plates: c1 = L_FF/2 and
// c2 = L_GG/2 evaluated at the trivial background.
double casimir_d2_from_model(const LagrangianModel& model, double separation);

// Anisotropic part of the expectation of the wave operator:
// Delta^{mu alpha nu beta} = d2 (eta^{mu nu} n^a n^b - ...), the unique
// axially symmetric form.
RankFourTensor casimir_delta(double d2, const FourVector& n);

// d1 * isotropic + Delta(d2, n). Equals d1 (gamma gamma - gamma gamma) with
// gamma = eta + (d2/d1) n n, exactly.
RankFourTensor casimir_omega_from_coefficients(double d1, double d2,
                                               const FourVector& n);
RankFourTensor casimir_omega(const CasimirVacuum& vac);

// gamma = eta + xi n n and its inverse (delegates to EffectiveMetric).
EffectiveMetric effective_metric_from_xi(double xi, const FourVector& n);

// Expectation for a constant classical background field: no fluctuation
// average, the classical tensor is the expectation.
RankFourTensor background_field_omega(const LagrangianModel& model,
                                      const Vec3& electric,
                                      const Vec3& magnetic);

}  // namespace nled
