#pragma once

#include <utility>

#include "nled/effective_metric.hpp"
#include "nled/fresnel.hpp"
#include "nled/rank_four.hpp"
#include "nled/vacuum.hpp"

namespace nled {

// Flat-metric orthonormal tetrad (u, e1, e2, w): u timelike, the rest
// spacelike, k contained in the u-w plane, e1/e2 the polarization legs.
// e1 is the out-of-plane direction k x n; e2 mixes the time axis with the
// n-orthogonal part of k, so both legs are orthogonal to the plate normal --
// on the effective null cone this is forced by the equation of motion, and
// the construction extends it deterministically off shell.
struct PolarizationTetrad {
  FourVector u;
  FourVector e1;
  FourVector e2;
  FourVector w;
};

// Throws TetradConstructionError when k is (anti)parallel to n or too close
// to the time axis for a spacelike in-plane leg to exist.
PolarizationTetrad polarization_tetrad(const FourVector& n,
                                       const FourVector& k);

// The effective metric implied by performing the polarization sum with the
// flat metric: gamma_tilde = eta + (2 d2 / (2 d1 + d2)) n n. Differs from the
// bootstrap-consistent gamma = eta + (d2/d1) n n at second order in d2/d1.
EffectiveMetric minkowski_polsum_metric(double d1, double d2,
                                        const FourVector& n);

// Frobenius norm of 3 lambda gamma^{mu nu} - Omega^{mu alpha nu beta}
// g_{alpha beta}, scaled by |Omega|_F. Vanishes exactly when the metric is
// the one the state actually propagates on.
double bootstrap_residual(const RankFourTensor& omega,
                          const EffectiveMetric& metric, double lambda);

// Contracts the photon equation with the tetrad polarization sum including
// the k^2-proportional correction term, and compares against the dispersion
// form 2 (d1 k^2 + d2 (k.n)^2) built from gamma. Returns the deviation
// relative to the natural magnitude of those terms.
double corrected_polsum_check(double d1, double d2, const FourVector& n,
                              const FourVector& k);

// The raw correction term k^2 Delta_{mu alpha nu beta} u^mu u^nu w^alpha
// w^beta for a caller-supplied tetrad (used to check the identity
// Delta uuww = d2 [ -1 + sum_r (n.e_r)^2 ]).
double polsum_extra_term(const RankFourTensor& delta,
                         const PolarizationTetrad& tetrad, double k_squared);

struct PolsumComparison {
  double xi = 0.0;        // d2/d1
  double xi_tilde = 0.0;  // 2 d2 / (2 d1 + d2)
  EffectiveMetric gamma;
  EffectiveMetric gamma_tilde;
  double leading_gap_coeff = 0.0;  // (xi_tilde - xi)/xi^2, -> -1/2 as xi -> 0
  double bootstrap_residual_gamma = 0.0;
  double bootstrap_residual_gamma_tilde = 0.0;
};

PolsumComparison compare_polarization_sums(double d1, double d2,
                                           const FourVector& n);

// Diagnostic for birefringent states: quadratic value of each mode's
// polarization against the wave matrix at the midpoint frequency. Both vanish
// only when the two modes share a dispersion relation; no averaged dispersion
// is ever formed from them.
std::pair<double, double> averaged_dispersion_diagnostic(
    const RankFourTensor& omega, const Vec3& khat);

}  // namespace nled
