#include "nled/kinematics.hpp"

#include <cmath>

#include "nled/errors.hpp"

namespace nled {

namespace {
void require_cone(double xi, double theta, double cone2) {
  if (!(cone2 > 0.0))
    throw DegenerateConeError("dispersion cone degenerate: 1 + xi cos^2 <= 0 (xi=" +
                              std::to_string(xi) + ", theta=" +
                              std::to_string(theta) + ")");
}
}  // namespace

double phase_velocity(double xi, double theta) {
  const double c = std::cos(theta);
  const double cone2 = 1.0 + xi * c * c;
  require_cone(xi, theta, cone2);
  return std::sqrt(cone2);
}

double normalization_coefficient(double xi, double theta) {
  const double c = std::cos(theta);
  return std::sqrt(1.0 + (2.0 * xi + xi * xi) * c * c);
}

GroupVelocity group_velocity(double xi, double theta) {
  const double vp = phase_velocity(xi, theta);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  GroupVelocity g;
  g.vec = Vec3(s, 0.0, (1.0 + xi) * c) / vp;
  g.norm = normalization_coefficient(xi, theta) / vp;
  return g;
}

PolarizationBasis polarization_basis(double xi, double theta) {
  const double n = normalization_coefficient(xi, theta);
  if (n <= 1e-12)
    throw DegenerateConeError("polarization normalization N(theta) degenerate");
  PolarizationBasis b;
  b.pol1 = Vec3(0.0, 1.0, 0.0);
  b.pol2 = Vec3((1.0 + xi) * std::cos(theta), 0.0, -std::sin(theta)) / n;
  b.n_theta = n;
  return b;
}

PropagationState propagation_state(double xi, double theta) {
  PropagationState st;
  st.theta = theta;
  st.xi = xi;
  st.v_phase = phase_velocity(xi, theta);
  const GroupVelocity g = group_velocity(xi, theta);
  st.v_group_vec = g.vec;
  st.v_group = g.norm;
  const PolarizationBasis b = polarization_basis(xi, theta);
  st.pol1 = b.pol1;
  st.pol2 = b.pol2;
  st.n_theta = b.n_theta;
  st.ray_angle = std::atan2(std::sin(theta), (1.0 + xi) * std::cos(theta));
  return st;
}

PropagationState rotate_about_normal(const PropagationState& s, double phi) {
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  auto rot = [&](const Vec3& v) {
    return Vec3(cp * v.x() - sp * v.y(), sp * v.x() + cp * v.y(), v.z());
  };
  PropagationState out = s;
  out.v_group_vec = rot(s.v_group_vec);
  out.pol1 = rot(s.pol1);
  out.pol2 = rot(s.pol2);
  return out;
}

}  // namespace nled
