#include "nled/lagrangian.hpp"

#include <cmath>

namespace nled {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw InvalidArgument(std::string(what) + ": non-finite derivative value");
}
}  // namespace

EHCoefficients EHCoefficients::from_alpha(double alpha, double m_e) {
  if (m_e <= 0.0) throw InvalidArgument("EHCoefficients: m_e must be > 0");
  if (!(alpha >= 0.0)) throw InvalidArgument("EHCoefficients: alpha must be >= 0");
  EHCoefficients c;
  c.alpha = alpha;
  c.m_e = m_e;
  const double m4 = m_e * m_e * m_e * m_e;
  c.c1 = alpha * alpha / (90.0 * kPi * kPi * m4);
  c.c2 = 1.75 * c.c1;  // 7/4 ratio held exactly
  return c;
}

LagrangianModel LagrangianModel::maxwell() {
  LagrangianModel m;
  m.kind_ = LagrangianKind::Maxwell;
  m.l_f_ = [](double, double) { return -1.0 / (4.0 * kPi); };
  m.l_g_ = [](double, double) { return 0.0; };
  m.l_ff_ = [](double, double) { return 0.0; };
  m.l_gg_ = [](double, double) { return 0.0; };
  m.l_fg_ = [](double, double) { return 0.0; };
  return m;
}

LagrangianModel LagrangianModel::euler_heisenberg(double alpha, double m_e) {
  const EHCoefficients c = EHCoefficients::from_alpha(alpha, m_e);
  LagrangianModel m;
  m.kind_ = LagrangianKind::EulerHeisenberg;
  m.eh_ = c;
  m.l_f_ = [c](double f, double) { return -1.0 / (4.0 * kPi) + 2.0 * c.c1 * f; };
  m.l_g_ = [c](double, double g) { return 2.0 * c.c2 * g; };
  m.l_ff_ = [c](double, double) { return 2.0 * c.c1; };
  m.l_gg_ = [c](double, double) { return 2.0 * c.c2; };
  m.l_fg_ = [](double, double) { return 0.0; };
  return m;
}

LagrangianModel LagrangianModel::custom_from_values(double l_f, double l_g,
                                                    double l_ff, double l_gg,
                                                    double l_fg) {
  for (double v : {l_f, l_g, l_ff, l_gg, l_fg}) require_finite(v, "custom_from_values");
  LagrangianModel m;
  m.kind_ = LagrangianKind::Custom;
  m.l_f_ = [l_f](double, double) { return l_f; };
  m.l_g_ = [l_g](double, double) { return l_g; };
  m.l_ff_ = [l_ff](double, double) { return l_ff; };
  m.l_gg_ = [l_gg](double, double) { return l_gg; };
  m.l_fg_ = [l_fg](double, double) { return l_fg; };
  return m;
}

LagrangianModel LagrangianModel::custom_from_function(Scalar2 lagrangian) {
  if (!lagrangian)
    throw InvalidArgument("custom_from_function: empty function");
  auto step = [](double f, double g) {
    return 1e-4 * std::max({1.0, std::abs(f), std::abs(g)});
  };
  LagrangianModel m;
  m.kind_ = LagrangianKind::Custom;
  m.l_f_ = [lagrangian, step](double f, double g) {
    const double h = step(f, g);
    return (lagrangian(f + h, g) - lagrangian(f - h, g)) / (2.0 * h);
  };
  m.l_g_ = [lagrangian, step](double f, double g) {
    const double h = step(f, g);
    return (lagrangian(f, g + h) - lagrangian(f, g - h)) / (2.0 * h);
  };
  m.l_ff_ = [lagrangian, step](double f, double g) {
    const double h = step(f, g);
    return (lagrangian(f + h, g) - 2.0 * lagrangian(f, g) +
            lagrangian(f - h, g)) /
           (h * h);
  };
  m.l_gg_ = [lagrangian, step](double f, double g) {
    const double h = step(f, g);
    return (lagrangian(f, g + h) - 2.0 * lagrangian(f, g) +
            lagrangian(f, g - h)) /
           (h * h);
  };
  m.l_fg_ = [lagrangian, step](double f, double g) {
    const double h = step(f, g);
    return (lagrangian(f + h, g + h) - lagrangian(f + h, g - h) -
            lagrangian(f - h, g + h) + lagrangian(f - h, g - h)) /
           (4.0 * h * h);
  };
  return m;
}

RankFourTensor omega_from_lagrangian(const LagrangianModel& model,
                                     const FieldTensor& background) {
  const double f_inv = invariant_f(background);
  const double g_inv = invariant_g(background);

  const double lf = model.l_f(f_inv, g_inv);
  const double lg = model.l_g(f_inv, g_inv);
  const double lff = model.l_ff(f_inv, g_inv);
  const double lgg = model.l_gg(f_inv, g_inv);
  const double lfg = model.l_fg(f_inv, g_inv);
  for (double v : {lf, lg, lff, lgg, lfg})
    require_finite(v, "omega_from_lagrangian");

  const Mat4 fu = background.upper();
  const Mat4 du = hodge_dual(background).upper();

  std::array<double, 256> c;
  size_t idx = 0;
  for (int s1 = 0; s1 < 4; ++s1) {
    for (int s2 = 0; s2 < 4; ++s2) {
      for (int s3 = 0; s3 < 4; ++s3) {
        for (int s4 = 0; s4 < 4; ++s4) {
          const double iso =
              (s1 == s3 && s2 == s4 ? eta_diag(s1) * eta_diag(s2) : 0.0) -
              (s1 == s4 && s2 == s3 ? eta_diag(s1) * eta_diag(s2) : 0.0);
          const double eps = levi_civita_upper(s1, s2, s3, s4);
          const double mterm = lff * fu(s1, s2) * fu(s3, s4) +
                               lgg * du(s1, s2) * du(s3, s4) +
                               lfg * (fu(s1, s2) * du(s3, s4) +
                                      du(s1, s2) * fu(s3, s4));
          c[idx++] = 0.25 * (lf * iso + lg * eps + mterm);
        }
      }
    }
  }
  return RankFourTensor::from_components(c);
}

double omega_epsilon_coefficient(const LagrangianModel& model,
                                 const FieldTensor& background) {
  const double f_inv = invariant_f(background);
  const double g_inv = invariant_g(background);
  return 0.25 * model.l_g(f_inv, g_inv);
}

OmegaDecomposition decompose_omega(const RankFourTensor& omega) {
  static const RankFourTensor unit_iso = RankFourTensor::isotropic(1.0);
  static const double iso_norm2 = frobenius_inner(unit_iso, unit_iso);  // 24
  OmegaDecomposition out;
  out.d1 = frobenius_inner(omega, unit_iso) / iso_norm2;
  out.delta = omega - unit_iso * out.d1;
  return out;
}

}  // namespace nled
