#include "nled/minkowski.hpp"

#include <cmath>

namespace nled {

double levi_civita_lower(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0.0;
    }
  }
  // Sign of the permutation by counting inversions.
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] > idx[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1.0 : -1.0;
}

void require_unit_spacelike(const FourVector& n, const char* what) {
  const double nn = minkowski_norm2(n);
  if (!std::isfinite(nn) || std::abs(nn - 1.0) > 1e-12) {
    throw InvalidArgument(std::string(what) +
                          ": expected a unit spacelike four-vector (n.n = 1)");
  }
}

Mat4 lorentz_boost(const Vec3& axis, double rapidity) {
  const double norm = axis.norm();
  if (norm < 1e-14) throw InvalidArgument("lorentz_boost: zero axis");
  const Vec3 e = axis / norm;
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);

  Mat4 L = Mat4::Identity();
  L(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    L(0, i + 1) = -sh * e[i];
    L(i + 1, 0) = -sh * e[i];
    for (int j = 0; j < 3; ++j) {
      L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * e[i] * e[j];
    }
  }
  return L;
}

}  // namespace nled
