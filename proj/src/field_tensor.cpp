#include "nled/field_tensor.hpp"

#include <cmath>

namespace nled {

namespace {
Mat4 raise_both(const Mat4& lower) {
  Mat4 up;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      up(m, n) = eta_diag(m) * eta_diag(n) * lower(m, n);
  return up;
}
}  // namespace

FieldTensor FieldTensor::from_components(const Mat4& f_lower) {
  const double scale = std::max(1.0, f_lower.cwiseAbs().maxCoeff());
  if (!f_lower.allFinite())
    throw InvalidArgument("FieldTensor: non-finite components");
  if ((f_lower + f_lower.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
    throw InvalidArgument("FieldTensor: components are not antisymmetric");
  FieldTensor out;
  out.f_ = 0.5 * (f_lower - f_lower.transpose());
  return out;
}

FieldTensor FieldTensor::from_fields(const Vec3& electric,
                                     const Vec3& magnetic) {
  Mat4 f = Mat4::Zero();
  for (int i = 0; i < 3; ++i) {
    f(0, i + 1) = electric[i];
    f(i + 1, 0) = -electric[i];
  }
  // F_{ij} = eps_{ijk} B_k
  f(1, 2) = magnetic[2];
  f(2, 1) = -magnetic[2];
  f(2, 3) = magnetic[0];
  f(3, 2) = -magnetic[0];
  f(3, 1) = magnetic[1];
  f(1, 3) = -magnetic[1];
  FieldTensor out;
  out.f_ = f;
  return out;
}

Mat4 FieldTensor::upper() const { return raise_both(f_); }

Vec3 FieldTensor::electric() const {
  return Vec3(f_(0, 1), f_(0, 2), f_(0, 3));
}

Vec3 FieldTensor::magnetic() const {
  return Vec3(f_(2, 3), f_(3, 1), f_(1, 2));
}

FieldTensor FieldTensor::operator+(const FieldTensor& o) const {
  return FieldTensor(Mat4(f_ + o.f_));
}
FieldTensor FieldTensor::operator-(const FieldTensor& o) const {
  return FieldTensor(Mat4(f_ - o.f_));
}
FieldTensor FieldTensor::operator*(double s) const {
  return FieldTensor(Mat4(s * f_));
}

FieldTensor hodge_dual(const FieldTensor& f) {
  Mat4 dual_up = Mat4::Zero();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      double sum = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          sum += levi_civita_upper(m, n, r, s) * f(r, s);
      dual_up(m, n) = 0.5 * sum;
    }
  }
  Mat4 dual_low;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      dual_low(m, n) = eta_diag(m) * eta_diag(n) * dual_up(m, n);
  return FieldTensor::from_components(dual_low);
}

Invariants field_invariants(const FieldTensor& f, const FourVector& n) {
  require_unit_spacelike(n, "field_invariants");

  const Mat4 low = f.lower();
  const Mat4 up = f.upper();
  const Mat4 dual_up = hodge_dual(f).upper();

  Invariants inv;
  inv.f_inv = 0.25 * (low.cwiseProduct(up)).sum();
  // (1/4) F_{mn} *F^{mn}; the dual is stored lowered, so raise it back.
  double g = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int nn = 0; nn < 4; ++nn) g += low(m, nn) * dual_up(m, nn);
  inv.g_inv = 0.25 * g;

  // H = n^m F_{ms} F^{sv} n_v, raising both indices of the second factor.
  const Vec4 nv = n.as_vector().c;
  const Vec4 nl = n.as_one_form().c;
  double h = 0.0;
  for (int m = 0; m < 4; ++m) {
    if (nv[m] == 0.0) continue;
    for (int s = 0; s < 4; ++s) {
      for (int v = 0; v < 4; ++v) {
        h += nv[m] * low(m, s) * eta_diag(s) * eta_diag(v) * low(s, v) * nl[v];
      }
    }
  }
  inv.h_inv = h;
  return inv;
}

Invariants field_invariants_from_vectors(const Vec3& electric,
                                         const Vec3& magnetic,
                                         const FourVector& n) {
  require_unit_spacelike(n, "field_invariants_from_vectors");
  const Vec3 nv = n.as_vector().spatial();
  Invariants inv;
  inv.f_inv = 0.5 * (magnetic.squaredNorm() - electric.squaredNorm());
  inv.g_inv = -electric.dot(magnetic);
  const double en = electric.dot(nv);
  const Vec3 nxb = nv.cross(magnetic);
  inv.h_inv = en * en - nxb.squaredNorm();
  return inv;
}

FieldTensor boost_field(const FieldTensor& f, const Mat4& boost) {
  // F'^{mn} = L^m_a L^n_b F^{ab}, then lower.
  const Mat4 up = f.upper();
  const Mat4 up2 = boost * up * boost.transpose();
  Mat4 low;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      low(m, n) = eta_diag(m) * eta_diag(n) * up2(m, n);
  return FieldTensor::from_components(low);
}

}  // namespace nled
