#pragma once

#include "nled/minkowski.hpp"

namespace nled {

// Closed-form propagation data for the axially symmetric dispersion relation
// omega^2 = |k|^2 (1 + xi cos^2 theta), with theta the angle between the wave
// normal and the plate normal (not the ray direction; the ray angle is a
// derived quantity). Wave vectors live in the xz plane; rotate_about_normal
// maps results to any azimuth.
struct PropagationState {
  double theta = 0.0;
  double xi = 0.0;
  double v_phase = 1.0;
  Vec3 v_group_vec = Vec3::UnitZ();
  double v_group = 1.0;
  Vec3 pol1 = Vec3::UnitY();          // out-of-plane polarization
  Vec3 pol2 = Vec3::UnitX();          // in-plane polarization, Euclidean unit
  double n_theta = 1.0;               // in-plane normalization coefficient
  double ray_angle = 0.0;             // angle of v_group_vec to the normal
};

// sqrt(1 + xi cos^2 theta); > 1 for xi > 0 away from grazing incidence.
double phase_velocity(double xi, double theta);

struct GroupVelocity {
  Vec3 vec = Vec3::UnitZ();
  double norm = 1.0;
};

// vec = (sin, 0, (1+xi) cos)/v_phase; norm = N(theta)/v_phase. Satisfies
// v_g^2 = v_p^2 + xi^2 cos^2 sin^2 / v_p^2, so the group speed is never
// below the phase speed, with equality at normal and grazing incidence.
GroupVelocity group_velocity(double xi, double theta);

struct PolarizationBasis {
  Vec3 pol1 = Vec3::UnitY();
  Vec3 pol2 = Vec3::UnitX();
  double n_theta = 1.0;
};

// pol1 = (0,1,0); pol2 = ((1+xi) cos, 0, -sin)/N(theta) with
// N(theta) = sqrt(1 + 2 xi cos^2 + xi^2 cos^2). Both are unit with respect
// to the flat spatial metric and both satisfy gamma^{ij} k_i eps_j = 0.
PolarizationBasis polarization_basis(double xi, double theta);

double normalization_coefficient(double xi, double theta);  // N(theta)

PropagationState propagation_state(double xi, double theta);

// Rotates the xz-plane state about the normal to azimuth phi.
PropagationState rotate_about_normal(const PropagationState& s, double phi);

}  // namespace nled
