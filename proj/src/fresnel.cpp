#include "nled/fresnel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace nled {

namespace {

using Quad = std::array<double, 3>;   // quadratic in s
using Deg6 = std::array<double, 7>;   // degree-6 polynomial in s

Deg6 mul_qqq(const Quad& a, const Quad& b, const Quad& c) {
  std::array<double, 5> ab{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ab[i + j] += a[i] * b[j];
  Deg6 out{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 3; ++j) out[i + j] += ab[i] * c[j];
  return out;
}

void add_scaled(Deg6& acc, const Deg6& term, double sign) {
  for (int i = 0; i < 7; ++i) acc[i] += sign * term[i];
}

// Numerically stable roots of s^2 + b s + c.
std::array<std::complex<double>, 2> quadratic_roots(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    double r1, r2;
    if (q != 0.0) {
      r1 = q;
      r2 = c / q;
    } else {
      r1 = 0.5 * (-b + sq);
      r2 = 0.5 * (-b - sq);
    }
    return {std::complex<double>(r1, 0.0), std::complex<double>(r2, 0.0)};
  }
  const double sq = std::sqrt(-disc);
  return {std::complex<double>(-0.5 * b, 0.5 * sq),
          std::complex<double>(-0.5 * b, -0.5 * sq)};
}

std::vector<std::complex<double>> companion_roots(
    const std::array<double, 5>& monic_tail) {
  // monic quartic s^4 + p3 s^3 + p2 s^2 + p1 s + p0
  Mat4 comp = Mat4::Zero();
  comp(1, 0) = 1.0;
  comp(2, 1) = 1.0;
  comp(3, 2) = 1.0;
  comp(0, 3) = -monic_tail[0];
  comp(1, 3) = -monic_tail[1];
  comp(2, 3) = -monic_tail[2];
  comp(3, 3) = -monic_tail[3];
  Eigen::EigenSolver<Mat4> es(comp, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(4);
  for (int i = 0; i < 4; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

void snap_and_merge(std::vector<std::complex<double>>& roots) {
  for (auto& r : roots) {
    if (std::abs(r.imag()) <= 1e-9 * (1.0 + std::abs(r.real())))
      r = std::complex<double>(r.real(), 0.0);
  }
  // Merge pairs closer than the double-root tolerance.
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const double scale = 1.0 + std::abs(roots[i]);
      if (std::abs(roots[i] - roots[j]) <= 1e-9 * scale) {
        const std::complex<double> mid = 0.5 * (roots[i] + roots[j]);
        roots[i] = mid;
        roots[j] = mid;
      }
    }
  }
}

}  // namespace

WaveMatrix build_wave_matrix(const RankFourTensor& omega, const FourVector& k) {
  const Vec4 kl = k.as_one_form().c;
  WaveMatrix w;
  w.k = k.as_one_form();
  w.source = &omega;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a) {
        if (kl[a] == 0.0) continue;
        for (int b = 0; b < 4; ++b) sum += omega(m, a, n, b) * kl[a] * kl[b];
      }
      w.a(m, n) = sum;
    }
  }
  return w;
}

TemporalGaugeReduction temporal_gauge_reduce(const WaveMatrix& w) {
  TemporalGaugeReduction r;
  r.spatial = w.a.block<3, 3>(1, 1);
  r.constraint_row = w.a.block<1, 3>(0, 1).transpose();
  return r;
}

double QuarticDispersion::evaluate(double s) const {
  double acc = 0.0;
  for (int i = 4; i >= 0; --i) acc = acc * s + coeffs[static_cast<size_t>(i)];
  return acc;
}

double QuarticDispersion::gap() const {
  if (nonneg_roots.size() < 2) return 0.0;
  return nonneg_roots[0] - nonneg_roots[1];
}

QuarticDispersion fresnel_quartic(const RankFourTensor& omega,
                                  const Vec3& khat) {
  if (std::abs(khat.norm() - 1.0) > 1e-12)
    throw InvalidArgument("fresnel_quartic: khat must be a unit vector");

  // A^{ij}(s) entries are quadratics in s = omega/|k| with |k| = 1 and
  // k_mu = (-s, khat).
  Quad entry[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Quad q{0.0, 0.0, 0.0};
      q[2] = omega(i + 1, 0, j + 1, 0);
      double lin = 0.0;
      double con = 0.0;
      for (int m = 0; m < 3; ++m) {
        lin -= khat[m] *
               (omega(i + 1, 0, j + 1, m + 1) + omega(i + 1, m + 1, j + 1, 0));
        for (int n = 0; n < 3; ++n)
          con += khat[m] * khat[n] * omega(i + 1, m + 1, j + 1, n + 1);
      }
      q[1] = lin;
      q[0] = con;
      entry[i][j] = q;
    }
  }

  Deg6 det{};
  add_scaled(det, mul_qqq(entry[0][0], entry[1][1], entry[2][2]), 1.0);
  add_scaled(det, mul_qqq(entry[0][1], entry[1][2], entry[2][0]), 1.0);
  add_scaled(det, mul_qqq(entry[0][2], entry[1][0], entry[2][1]), 1.0);
  add_scaled(det, mul_qqq(entry[0][2], entry[1][1], entry[2][0]), -1.0);
  add_scaled(det, mul_qqq(entry[0][1], entry[1][0], entry[2][2]), -1.0);
  add_scaled(det, mul_qqq(entry[0][0], entry[1][2], entry[2][1]), -1.0);

  double scale = 0.0;
  for (double c : det) scale = std::max(scale, std::abs(c));
  if (scale == 0.0)
    throw OmegaDegenerateError(
        "fresnel_quartic: determinant vanishes identically");

  // The block structure guarantees at least two powers of s; anything left in
  // the two lowest coefficients is roundoff.
  if (std::abs(det[0]) > 1e-10 * scale || std::abs(det[1]) > 1e-10 * scale)
    throw Error("fresnel_quartic: s^2 factor missing from det(A^{ij})");

  QuarticDispersion out;
  out.khat = khat;
  for (int i = 0; i < 5; ++i) out.coeffs[static_cast<size_t>(i)] = det[i + 2];

  double qscale = 0.0;
  for (double c : out.coeffs) qscale = std::max(qscale, std::abs(c));
  if (std::abs(out.coeffs[4]) < 1e-12 * qscale)
    throw OmegaDegenerateError(
        "fresnel_quartic: no propagating mode in this direction");

  const double inv_lead = 1.0 / out.coeffs[4];
  std::array<double, 5> p{};  // monic: s^4 + p[3] s^3 + ... + p[0]
  for (int i = 0; i < 4; ++i) p[static_cast<size_t>(i)] = out.coeffs[static_cast<size_t>(i)] * inv_lead;
  p[4] = 1.0;

  // Perfect-square attempt: (s^2 + b s + c)^2. Companion eigenvalues of a
  // defective quartic split by ~sqrt(eps); the factored form keeps double
  // roots coincident to full precision.
  const double b = 0.5 * p[3];
  const double c = 0.5 * (p[2] - b * b);
  const double pscale =
      std::max({1.0, std::abs(p[3]), std::abs(p[2]), std::abs(p[1]),
                std::abs(p[0])});
  const double res1 = std::abs(p[1] - 2.0 * b * c);
  const double res0 = std::abs(p[0] - c * c);
  out.square_residual = std::max(res1, res0) / pscale;

  if (out.square_residual <= 1e-12) {
    out.perfect_square = true;
    const auto rr = quadratic_roots(b, c);
    out.roots = {rr[0], rr[0], rr[1], rr[1]};
  } else {
    out.roots = companion_roots(p);
    snap_and_merge(out.roots);
  }

  for (const auto& r : out.roots) {
    if (r.imag() != 0.0) continue;
    double v = r.real();
    if (v < 0.0 && v > -1e-12) v = 0.0;
    if (v >= 0.0) out.nonneg_roots.push_back(v);
  }
  std::sort(out.nonneg_roots.rbegin(), out.nonneg_roots.rend());
  return out;
}

std::vector<Vec3> fibonacci_sphere(int n) {
  if (n < 1) throw InvalidArgument("fibonacci_sphere: n must be positive");
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<size_t>(n));
  const double golden = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    dirs.back().normalize();
  }
  return dirs;
}

BirefringenceReport detect_birefringence(const RankFourTensor& omega,
                                         int n_dirs, double tol) {
  if (n_dirs < 16)
    throw InvalidArgument("detect_birefringence: n_dirs must be >= 16");

  BirefringenceReport report;
  report.tolerance = tol;
  report.directions.reserve(static_cast<size_t>(n_dirs));

  for (const Vec3& dir : fibonacci_sphere(n_dirs)) {
    const QuarticDispersion q = fresnel_quartic(omega, dir);
    if (q.nonneg_roots.size() < 2)
      throw OmegaDegenerateError(
          "detect_birefringence: fewer than two nonnegative phase speeds");
    DirectionRecord rec;
    rec.theta = std::acos(std::clamp(dir.z(), -1.0, 1.0));
    rec.phi = std::atan2(dir.y(), dir.x());
    rec.s1 = q.nonneg_roots[0];
    rec.s2 = q.nonneg_roots[1];
    rec.gap = rec.s1 - rec.s2;
    report.max_gap = std::max(report.max_gap, rec.gap);
    if (rec.gap > tol * std::max(1.0, rec.s1)) report.birefringent = true;
    report.directions.push_back(rec);
  }
  return report;
}

MetricFit fit_effective_metric(const RankFourTensor& omega, int n_dirs) {
  if (n_dirs < 10)
    throw FitUnderdeterminedError(
        "fit_effective_metric: need at least 10 directions");

  const auto dirs = fibonacci_sphere(n_dirs);
  Eigen::MatrixXd rows(n_dirs, 9);
  Eigen::VectorXd rhs(n_dirs);

  for (int i = 0; i < n_dirs; ++i) {
    const Vec3& k = dirs[static_cast<size_t>(i)];
    const QuarticDispersion q = fresnel_quartic(omega, k);
    if (q.nonneg_roots.empty())
      throw OmegaDegenerateError(
          "fit_effective_metric: no nonnegative phase speed");
    const double s = q.nonneg_roots[0];
    // gamma^{00} k0^2 = -s^2 moved to the right-hand side.
    rows(i, 0) = -2.0 * s * k.x();
    rows(i, 1) = -2.0 * s * k.y();
    rows(i, 2) = -2.0 * s * k.z();
    rows(i, 3) = k.x() * k.x();
    rows(i, 4) = 2.0 * k.x() * k.y();
    rows(i, 5) = 2.0 * k.x() * k.z();
    rows(i, 6) = k.y() * k.y();
    rows(i, 7) = 2.0 * k.y() * k.z();
    rows(i, 8) = k.z() * k.z();
    rhs(i) = s * s;
  }

  const Eigen::VectorXd x =
      rows.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  const double rms = std::sqrt((rows * x - rhs).squaredNorm() / n_dirs);
  if (rms > 1e-8)
    throw FitInconsistentError(
        "fit_effective_metric: single quadratic form does not describe the "
        "sampled null covectors (residual RMS " +
        std::to_string(rms) + ")");

  Mat4 gamma;
  gamma << -1.0, x(0), x(1), x(2),
           x(0), x(3), x(4), x(5),
           x(1), x(4), x(6), x(7),
           x(2), x(5), x(7), x(8);

  MetricFit fit{EffectiveMetric::from_gamma(gamma), rms};
  return fit;
}

}  // namespace nled
