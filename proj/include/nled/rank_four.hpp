#pragma once

#include <array>

#include "nled/field_tensor.hpp"
#include "nled/minkowski.hpp"

namespace nled {

// Dense rank-4 tensor T^{mu alpha nu beta} over Minkowski indices with the
// wave-operator symmetry class:
//
//   T^{mu alpha nu beta} =  T^{nu beta mu alpha}     (pair exchange)
//   T^{mu alpha nu beta} = -T^{alpha mu nu beta}     (first pair)
//   T^{mu alpha nu beta} = -T^{mu alpha beta nu}     (second pair)
//
// Slot order matches the photon equation: the wave matrix is
// A^{mu nu} = T^{mu alpha nu beta} k_alpha k_beta.
// Storage is the full 4^4 array; symmetry is validated at construction
// (1e-14 absolute on unit-scale tensors, scaled by the largest component).
class RankFourTensor {
 public:
  RankFourTensor() { c_.fill(0.0); }

  static RankFourTensor from_components(const std::array<double, 256>& c);
  // Projects arbitrary components onto the symmetry class (used by
  // test generators and by builders that assemble term-by-term).
  static RankFourTensor symmetrized(const std::array<double, 256>& c);

  // d * (eta^{mu nu} eta^{alpha beta} - eta^{mu beta} eta^{alpha nu})
  static RankFourTensor isotropic(double d);

  double operator()(int m, int a, int n, int b) const {
    return c_[static_cast<size_t>(((m * 4 + a) * 4 + n) * 4 + b)];
  }

  const std::array<double, 256>& components() const { return c_; }
  double max_abs() const;
  double frobenius_norm() const;

  RankFourTensor operator+(const RankFourTensor& o) const;
  RankFourTensor operator-(const RankFourTensor& o) const;
  RankFourTensor operator*(double s) const;

 private:
  std::array<double, 256> c_;
};

// T^{mu alpha nu beta} S_{alpha beta} for symmetric S (indices down).
// Bilinear in both arguments.
Mat4 contract_pair(const RankFourTensor& t, const Mat4& s_lower);

// lambda * (G^{mu nu} G^{alpha beta} - G^{mu beta} G^{alpha nu}) for a
// symmetric contravariant G. With G = eta this is isotropic(lambda).
RankFourTensor metric_pair_form(const Mat4& g_upper, double lambda);

// Frobenius inner product over the component array.
double frobenius_inner(const RankFourTensor& a, const RankFourTensor& b);

}  // namespace nled
