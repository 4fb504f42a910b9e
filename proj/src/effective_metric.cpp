#include "nled/effective_metric.hpp"

#include <cmath>

namespace nled {

EffectiveMetric EffectiveMetric::from_xi(double xi, const FourVector& n) {
  require_unit_spacelike(n, "EffectiveMetric::from_xi");
  if (1.0 + xi <= 1e-12)
    throw DegenerateMetricError("effective metric degenerate: 1 + xi <= 0");

  const Vec4 nu = n.as_vector().c;
  const Vec4 nl = n.as_one_form().c;

  EffectiveMetric m;
  m.xi = xi;
  m.gamma = minkowski_metric() + xi * nu * nu.transpose();
  m.g = minkowski_metric() - (xi / (1.0 + xi)) * nl * nl.transpose();
  return m;
}

EffectiveMetric EffectiveMetric::from_gamma(const Mat4& gamma_upper) {
  const double scale = std::max(1.0, gamma_upper.cwiseAbs().maxCoeff());
  if ((gamma_upper - gamma_upper.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * scale)
    throw InvalidArgument("EffectiveMetric::from_gamma: gamma not symmetric");
  if (std::abs(gamma_upper(0, 0) + 1.0) > 1e-9)
    throw InvalidArgument(
        "EffectiveMetric::from_gamma: expected normalization gamma^{00} = -1");

  Eigen::FullPivLU<Mat4> lu(gamma_upper);
  if (std::abs(lu.determinant()) < 1e-12 * std::pow(scale, 4))
    throw DegenerateMetricError("effective metric degenerate: det(gamma) ~ 0");

  EffectiveMetric m;
  m.gamma = gamma_upper;
  m.g = lu.inverse();
  m.xi = m.axial_xi(unit_normal_z());
  return m;
}

double EffectiveMetric::axial_xi(const FourVector& n) const {
  const Vec4 nl = n.as_one_form().c;
  return nl.dot(gamma * nl) - 1.0;
}

double EffectiveMetric::null_form(const FourVector& k) const {
  const Vec4 kl = k.as_one_form().c;
  return kl.dot(gamma * kl);
}

}  // namespace nled
