#include "nled/vacuum.hpp"

#include <cmath>

namespace nled {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double maxwell_d1() { return -1.0 / (16.0 * kPi); }

CasimirVacuum::CasimirVacuum(double separation_, double alpha_,
                             FourVector normal_)
    : separation(separation_), alpha(alpha_), normal(normal_) {
  if (!(separation > 0.0))
    throw InvalidArgument("CasimirVacuum: separation must be > 0");
  if (!(alpha >= 0.0)) throw InvalidArgument("CasimirVacuum: alpha must be >= 0");
  require_unit_spacelike(normal, "CasimirVacuum");
}

double StressTensor::trace() const {
  double tr = 0.0;
  for (int m = 0; m < 4; ++m) tr += eta_diag(m) * t_lower(m, m);
  return tr;
}

StressTensor casimir_stress(const CasimirVacuum& vac) {
  const double a4 = std::pow(vac.separation, 4);
  const double t00 = -kPi * kPi / (720.0 * a4);

  StressTensor t;
  t.t_lower = Mat4::Zero();
  t.t_lower(0, 0) = t00;
  t.t_lower(1, 1) = -t00;
  t.t_lower(2, 2) = -t00;
  t.t_lower(3, 3) = 3.0 * t00;

  // Rotate the plate-adapted diagonal when the normal is not z.
  const Vec3 n3 = vac.normal.as_vector().spatial();
  if ((n3 - Vec3(0, 0, 1)).norm() > 1e-14) {
    // T_ij = -t00 delta_ij + 4 t00 n_i n_j reproduces the diagonal form in
    // any frame; the energy density is rotation invariant.
    Mat4 t2 = Mat4::Zero();
    t2(0, 0) = t00;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t2(i + 1, j + 1) =
            -t00 * (i == j ? 1.0 : 0.0) + 4.0 * t00 * n3[i] * n3[j];
    t.t_lower = t2;
  }
  return t;
}

double casimir_d2(const CasimirVacuum& vac) {
  const double a4 = std::pow(vac.separation, 4);
  return -11.0 * kPi * vac.alpha * vac.alpha / (64800.0 * a4);
}

double d2_from_tzz(double c_sum, const StressTensor& t, const FourVector& n) {
  require_unit_spacelike(n, "d2_from_tzz");
  const Vec4 nv = n.as_vector().c;
  const double tnn = nv.dot(t.t_lower * nv);
  return (4.0 * kPi / 3.0) * c_sum * tnn;
}

double d2_from_t00(double c_sum, const StressTensor& t) {
  return 4.0 * kPi * c_sum * t.t00();
}

double casimir_d2_from_model(const LagrangianModel& model, double separation) {
  const double c_sum = 0.5 * (model.l_ff(0.0, 0.0) + model.l_gg(0.0, 0.0));
  const CasimirVacuum probe(separation, 0.0);
  return d2_from_t00(c_sum, casimir_stress(probe));
}

RankFourTensor casimir_delta(double d2, const FourVector& n) {
  require_unit_spacelike(n, "casimir_delta");
  const Vec4 nu = n.as_vector().c;

  std::array<double, 256> c;
  size_t idx = 0;
  for (int m = 0; m < 4; ++m) {
    for (int a = 0; a < 4; ++a) {
      for (int nn = 0; nn < 4; ++nn) {
        for (int b = 0; b < 4; ++b) {
          const double eta_mn = (m == nn) ? eta_diag(m) : 0.0;
          const double eta_mb = (m == b) ? eta_diag(m) : 0.0;
          const double eta_ab = (a == b) ? eta_diag(a) : 0.0;
          const double eta_an = (a == nn) ? eta_diag(a) : 0.0;
          c[idx++] = d2 * (eta_mn * nu[a] * nu[b] - eta_mb * nu[a] * nu[nn] +
                           eta_ab * nu[m] * nu[nn] - eta_an * nu[m] * nu[b]);
        }
      }
    }
  }
  return RankFourTensor::from_components(c);
}

RankFourTensor casimir_omega_from_coefficients(double d1, double d2,
                                               const FourVector& n) {
  return RankFourTensor::isotropic(d1) + casimir_delta(d2, n);
}

RankFourTensor casimir_omega(const CasimirVacuum& vac) {
  return casimir_omega_from_coefficients(maxwell_d1(), casimir_d2(vac),
                                         vac.normal);
}

EffectiveMetric effective_metric_from_xi(double xi, const FourVector& n) {
  return EffectiveMetric::from_xi(xi, n);
}

RankFourTensor background_field_omega(const LagrangianModel& model,
                                      const Vec3& electric,
                                      const Vec3& magnetic) {
  return omega_from_lagrangian(model,
                               FieldTensor::from_fields(electric, magnetic));
}

}  // namespace nled
