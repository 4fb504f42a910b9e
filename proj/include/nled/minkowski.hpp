#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "nled/errors.hpp"

namespace nled {

using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

// Metric signature (-,+,+,+); natural units hbar = c = 1.
inline Mat4 minkowski_metric() {
  Mat4 eta = Mat4::Identity();
  eta(0, 0) = -1.0;
  return eta;
}

inline double eta_diag(int mu) { return mu == 0 ? -1.0 : 1.0; }

// Totally antisymmetric symbol with eps_{0123} = +1 (covariant).
// The contravariant symbol then has eps^{0123} = -1.
double levi_civita_lower(int a, int b, int c, int d);
inline double levi_civita_upper(int a, int b, int c, int d) {
  return eta_diag(a) * eta_diag(b) * eta_diag(c) * eta_diag(d) *
         levi_civita_lower(a, b, c, d);
}

enum class Variance { Vector, OneForm };

// Four-component vector/one-form with explicit index variance.
// Raising/lowering with eta is an involution.
struct FourVector {
  Vec4 c = Vec4::Zero();  // ordered (t, x, y, z)
  Variance var = Variance::Vector;

  FourVector() = default;
  FourVector(double t, double x, double y, double z,
             Variance v = Variance::Vector)
      : c(t, x, y, z), var(v) {}
  FourVector(const Vec4& components, Variance v) : c(components), var(v) {}

  double t() const { return c[0]; }
  Vec3 spatial() const { return c.tail<3>(); }

  FourVector with_flipped_variance() const {
    FourVector out = *this;
    out.c[0] = -out.c[0];
    out.var = (var == Variance::Vector) ? Variance::OneForm : Variance::Vector;
    return out;
  }
  FourVector as_vector() const {
    return var == Variance::Vector ? *this : with_flipped_variance();
  }
  FourVector as_one_form() const {
    return var == Variance::OneForm ? *this : with_flipped_variance();
  }
};

// u^mu v_mu regardless of the variances the caller holds.
inline double minkowski_dot(const FourVector& u, const FourVector& v) {
  const Vec4 a = u.as_vector().c;
  const Vec4 b = v.as_one_form().c;
  return a.dot(b);
}

inline double minkowski_norm2(const FourVector& u) {
  return minkowski_dot(u, u);
}

inline FourVector unit_normal_z() {
  return FourVector(0.0, 0.0, 0.0, 1.0, Variance::Vector);
}

// Throws unless n.n = +1 within tolerance.
void require_unit_spacelike(const FourVector& n, const char* what);

// Pure boost with the given rapidity along a unit spatial axis, as the
// matrix L^mu_nu acting on contravariant components.
Mat4 lorentz_boost(const Vec3& axis, double rapidity);

}  // namespace nled
