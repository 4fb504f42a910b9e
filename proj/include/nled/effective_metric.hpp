#pragma once

#include "nled/minkowski.hpp"

namespace nled {

// Effective optical geometry: contravariant gamma^{mu nu} (the tensor that
// null wave covectors annihilate) together with its inverse g_{mu nu}.
// Indices are always moved with the flat metric, so g is not obtained by
// lowering gamma; the two are independent fields related by gamma * g = 1.
// Normalization convention: gamma^{00} = -1.
struct EffectiveMetric {
  Mat4 gamma = minkowski_metric();  // upper indices
  Mat4 g = minkowski_metric();      // lower indices
  double xi = 0.0;                  // axial coefficient when built from (xi, n)

  // gamma = eta + xi n n,  g = eta - (xi / (1 + xi)) n n.
  // Throws DegenerateMetricError when 1 + xi <= 1e-12.
  static EffectiveMetric from_xi(double xi, const FourVector& n);

  // Generic symmetric gamma with gamma^{00} = -1; g by numerical inversion.
  static EffectiveMetric from_gamma(const Mat4& gamma_upper);

  // n_mu gamma^{mu nu} n_nu - 1: recovers xi for metrics of the axial form.
  double axial_xi(const FourVector& n) const;

  // gamma^{mu nu} k_mu k_nu for a wave one-form.
  double null_form(const FourVector& k) const;
};

}  // namespace nled
