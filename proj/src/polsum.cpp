#include "nled/polsum.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace nled {

PolarizationTetrad polarization_tetrad(const FourVector& n,
                                       const FourVector& k) {
  require_unit_spacelike(n, "polarization_tetrad");

  const Vec3 n3 = n.as_vector().spatial();
  const Vec4 kl = k.as_one_form().c;
  const Vec3 k3(kl[1], kl[2], kl[3]);

  const Vec3 kperp = k3 - k3.dot(n3) * n3;
  const double kp = kperp.norm();
  if (kp <= 1e-12 * std::max(1.0, k3.norm()))
    throw TetradConstructionError(
        "polarization_tetrad: k is parallel to the normal");

  const Vec3 e1dir = k3.cross(n3).normalized();
  const FourVector e1(0.0, e1dir.x(), e1dir.y(), e1dir.z(), Variance::Vector);

  const FourVector that(1.0, 0.0, 0.0, 0.0, Variance::Vector);
  const Vec3 mdir = kperp / kp;
  const FourVector mhat(0.0, mdir.x(), mdir.y(), mdir.z(), Variance::Vector);

  const double mk = minkowski_dot(mhat, k);
  const double tk = minkowski_dot(that, k);
  const double e2_norm2 = tk * tk - mk * mk;
  if (e2_norm2 <= 1e-24)
    throw TetradConstructionError(
        "polarization_tetrad: no spacelike in-plane polarization for this k");
  Vec4 e2raw = mk * that.c + (-tk) * mhat.c;
  const FourVector e2(Vec4(e2raw / std::sqrt(e2_norm2)), Variance::Vector);

  const double te2 = minkowski_dot(that, e2);
  Vec4 uraw = that.c - te2 * e2.c;
  const FourVector upre(uraw, Variance::Vector);
  const double un2 = -minkowski_norm2(upre);
  const FourVector u(Vec4(uraw / std::sqrt(un2)), Variance::Vector);

  const FourVector kvec = k.as_vector();
  const double ku = minkowski_dot(kvec, u);
  Vec4 wraw = kvec.c + ku * u.c;
  const FourVector wpre(wraw, Variance::Vector);
  const double wn2 = minkowski_norm2(wpre);
  if (wn2 <= 1e-24)
    throw TetradConstructionError(
        "polarization_tetrad: degenerate k, cannot complete the tetrad");
  const FourVector w(Vec4(wraw / std::sqrt(wn2)), Variance::Vector);

  return PolarizationTetrad{u, e1, e2, w};
}

EffectiveMetric minkowski_polsum_metric(double d1, double d2,
                                        const FourVector& n) {
  const double denom = 2.0 * d1 + d2;
  if (std::abs(denom) <= 1e-14 * std::max({1.0, std::abs(d1), std::abs(d2)}))
    throw InvalidArgument("minkowski_polsum_metric: singular denominator");
  return EffectiveMetric::from_xi(2.0 * d2 / denom, n);
}

double bootstrap_residual(const RankFourTensor& omega,
                          const EffectiveMetric& metric, double lambda) {
  const Mat4 contracted = contract_pair(omega, metric.g);
  const Mat4 target = 3.0 * lambda * metric.gamma;
  const double omega_norm = omega.frobenius_norm();
  if (omega_norm == 0.0) return (target - contracted).norm();
  return (target - contracted).norm() / omega_norm;
}

double polsum_extra_term(const RankFourTensor& delta,
                         const PolarizationTetrad& tetrad, double k_squared) {
  const Vec4 ul = tetrad.u.as_one_form().c;
  const Vec4 wl = tetrad.w.as_one_form().c;
  double duuww = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a)
      for (int n = 0; n < 4; ++n)
        for (int b = 0; b < 4; ++b)
          duuww += delta(m, a, n, b) * ul[m] * wl[a] * ul[n] * wl[b];
  return k_squared * duuww;
}

double corrected_polsum_check(double d1, double d2, const FourVector& n,
                              const FourVector& k) {
  const RankFourTensor delta = casimir_delta(d2, n);
  const PolarizationTetrad tetrad = polarization_tetrad(n, k);

  const Vec4 kl = k.as_one_form().c;
  const double k2 = minkowski_norm2(k);
  const double kn = minkowski_dot(k, n);

  // Delta^{mu alpha}{}_{nu alpha} k_mu k^nu
  const Mat4 traced = contract_pair(delta, minkowski_metric());
  const double term1 = kl.dot(traced * kl);
  const double term2 = polsum_extra_term(delta, tetrad, k2);

  const double lhs = 2.0 * d1 * k2 + term1 + term2;
  const double rhs = 2.0 * (d1 * k2 + d2 * kn * kn);

  const double scale = 2.0 * std::abs(d1) * kl.squaredNorm() +
                       2.0 * std::abs(d2) * kn * kn + 1e-300;
  return std::abs(lhs - rhs) / scale;
}

PolsumComparison compare_polarization_sums(double d1, double d2,
                                           const FourVector& n) {
  if (d1 == 0.0)
    throw InvalidArgument("compare_polarization_sums: d1 must be nonzero");

  PolsumComparison cmp;
  cmp.xi = d2 / d1;
  cmp.gamma = EffectiveMetric::from_xi(cmp.xi, n);
  cmp.gamma_tilde = minkowski_polsum_metric(d1, d2, n);
  cmp.xi_tilde = cmp.gamma_tilde.xi;
  cmp.leading_gap_coeff =
      cmp.xi == 0.0 ? 0.0 : (cmp.xi_tilde - cmp.xi) / (cmp.xi * cmp.xi);

  const RankFourTensor omega = casimir_omega_from_coefficients(d1, d2, n);
  cmp.bootstrap_residual_gamma = bootstrap_residual(omega, cmp.gamma, d1);
  cmp.bootstrap_residual_gamma_tilde =
      bootstrap_residual(omega, cmp.gamma_tilde, d1);
  return cmp;
}

std::pair<double, double> averaged_dispersion_diagnostic(
    const RankFourTensor& omega, const Vec3& khat) {
  const QuarticDispersion q = fresnel_quartic(omega, khat);
  if (q.nonneg_roots.size() < 2)
    throw OmegaDegenerateError(
        "averaged_dispersion_diagnostic: need two nonnegative roots");
  const double s1 = q.nonneg_roots[0];
  const double s2 = q.nonneg_roots[1];
  const double smid = 0.5 * (s1 + s2);

  const auto mid = temporal_gauge_reduce(build_wave_matrix(
      omega, FourVector(-smid, khat.x(), khat.y(), khat.z(),
                        Variance::OneForm)));
  const double mid_scale = std::max(mid.spatial.norm(), 1e-300);

  auto mode_value = [&](double s) {
    const auto red = temporal_gauge_reduce(build_wave_matrix(
        omega,
        FourVector(-s, khat.x(), khat.y(), khat.z(), Variance::OneForm)));
    Eigen::JacobiSVD<Mat3> svd(red.spatial, Eigen::ComputeFullV);
    const Vec3 pol = svd.matrixV().col(2);
    return pol.dot(mid.spatial * pol) / mid_scale;
  };
  return {mode_value(s1), mode_value(s2)};
}

}  // namespace nled
