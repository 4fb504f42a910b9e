#pragma once

#include "nled/minkowski.hpp"

namespace nled {

// Antisymmetric electromagnetic field tensor, stored as the covariant
// components F_{mu nu} with the convention F_{0i} = E_i, F_{ij} = eps_{ijk} B_k.
class FieldTensor {
 public:
  FieldTensor() : f_(Mat4::Zero()) {}

  // Validates antisymmetry within 1e-14 scaled by the largest component.
  static FieldTensor from_components(const Mat4& f_lower);
  static FieldTensor from_fields(const Vec3& electric, const Vec3& magnetic);

  const Mat4& lower() const { return f_; }
  // F^{mu nu} = eta^{mu a} eta^{nu b} F_{ab}.
  Mat4 upper() const;

  Vec3 electric() const;
  Vec3 magnetic() const;

  double operator()(int mu, int nu) const { return f_(mu, nu); }

  FieldTensor operator+(const FieldTensor& o) const;
  FieldTensor operator-(const FieldTensor& o) const;
  FieldTensor operator*(double s) const;

 private:
  explicit FieldTensor(const Mat4& f) : f_(f) {}
  Mat4 f_;
};

// *F^{mu nu} = (1/2) eps^{mu nu rho sigma} F_{rho sigma}, returned lowered.
// Applying twice gives -F (Lorentzian signature).
FieldTensor hodge_dual(const FieldTensor& f);

struct Invariants {
  double f_inv = 0.0;  // (1/4) F_{mn} F^{mn}     = (B^2 - E^2)/2
  double g_inv = 0.0;  // (1/4) F_{mn} *F^{mn}    = -E.B
  double h_inv = 0.0;  // n^m F_{ms} F^{sn} n_n   = (E.n)^2 - |n x B|^2
};

// Contraction route. Rejects a non-unit-spacelike n.
Invariants field_invariants(const FieldTensor& f, const FourVector& n);
// Three-vector route; agrees with the contraction route to 1e-13.
Invariants field_invariants_from_vectors(const Vec3& electric,
                                         const Vec3& magnetic,
                                         const FourVector& n);

inline double invariant_f(const FieldTensor& f) {
  return field_invariants(f, unit_normal_z()).f_inv;
}
inline double invariant_g(const FieldTensor& f) {
  return field_invariants(f, unit_normal_z()).g_inv;
}

// F' = boosted field: contravariant components conjugated by L, then lowered.
FieldTensor boost_field(const FieldTensor& f, const Mat4& boost);

}  // namespace nled
