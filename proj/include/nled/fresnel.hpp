#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nled/effective_metric.hpp"
#include "nled/rank_four.hpp"

namespace nled {

// A^{mu nu}(k) = Omega^{mu alpha nu beta} k_alpha k_beta. The wave covector
// itself is always a null eigenvector (gauge mode), so det(A) = 0 identically.
struct WaveMatrix {
  Mat4 a = Mat4::Zero();
  FourVector k;                          // one-form
  const RankFourTensor* source = nullptr;  // non-owning
};

WaveMatrix build_wave_matrix(const RankFourTensor& omega, const FourVector& k);

// Temporal gauge a_0 = 0: the propagation problem reduces to the spatial
// block; the A^{0i} row is kept as the constraint it implies.
struct TemporalGaugeReduction {
  Mat3 spatial = Mat3::Zero();
  Vec3 constraint_row = Vec3::Zero();
};

TemporalGaugeReduction temporal_gauge_reduce(const WaveMatrix& w);

// det(A^{ij}) restricted to a spatial direction, as a polynomial in
// s = omega/|k|. The degree-6 determinant always carries an s^2 factor;
// what remains is the quartic whose roots are the phase speeds.
struct QuarticDispersion {
  Vec3 khat = Vec3::UnitZ();
  std::array<double, 5> coeffs{};  // q0..q4 of P4(s), raw scale
  std::vector<std::complex<double>> roots;  // all four, merged pairs repeated
  std::vector<double> nonneg_roots;         // real s >= 0, descending
  // Set when the monic quartic factors as (s^2 + b s + c)^2 within
  // 1e-12 of its coefficient scale; the roots are then exact double roots of
  // the quadratic instead of eigenvalues of a defective companion matrix.
  bool perfect_square = false;
  double square_residual = 0.0;

  double evaluate(double s) const;
  double gap() const;  // s1 - s2 over the two leading nonnegative roots
};

QuarticDispersion fresnel_quartic(const RankFourTensor& omega,
                                  const Vec3& khat);

struct DirectionRecord {
  double theta = 0.0;
  double phi = 0.0;
  double s1 = 0.0;  // s1 >= s2 >= 0
  double s2 = 0.0;
  double gap = 0.0;
};

struct BirefringenceReport {
  std::vector<DirectionRecord> directions;
  bool birefringent = false;
  double max_gap = 0.0;
  double tolerance = 0.0;
  std::optional<EffectiveMetric> fitted_metric;  // attached by callers
};

// Samples a deterministic Fibonacci sphere; flags birefringence when any
// direction shows a root gap above tol * max(1, s1). Requires n_dirs >= 16.
BirefringenceReport detect_birefringence(const RankFourTensor& omega,
                                         int n_dirs, double tol);

struct MetricFit {
  EffectiveMetric metric;
  double residual_rms = 0.0;
};

// Least-squares quadratic form through the sampled null covectors
// (-s(theta, phi), khat), normalized to gamma^{00} = -1. Only meaningful when
// detect_birefringence came back clean. Throws FitUnderdetermined for
// n_dirs < 10 and FitInconsistent when the residual RMS exceeds 1e-8.
MetricFit fit_effective_metric(const RankFourTensor& omega, int n_dirs);

// Deterministic, seedless direction set.
std::vector<Vec3> fibonacci_sphere(int n);

}  // namespace nled
