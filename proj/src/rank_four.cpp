#include "nled/rank_four.hpp"

#include <cmath>

namespace nled {

namespace {
inline size_t flat(int m, int a, int n, int b) {
  return static_cast<size_t>(((m * 4 + a) * 4 + n) * 4 + b);
}
}  // namespace

RankFourTensor RankFourTensor::from_components(
    const std::array<double, 256>& c) {
  RankFourTensor t;
  t.c_ = c;
  double scale = 1.0;
  for (double v : c) {
    if (!std::isfinite(v))
      throw InvalidArgument("RankFourTensor: non-finite components");
    scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-14 * scale;
  for (int m = 0; m < 4; ++m) {
    for (int a = 0; a < 4; ++a) {
      for (int n = 0; n < 4; ++n) {
        for (int b = 0; b < 4; ++b) {
          const double v = c[flat(m, a, n, b)];
          if (std::abs(v - c[flat(n, b, m, a)]) > tol)
            throw InvalidArgument(
                "RankFourTensor: pair-exchange symmetry violated");
          if (std::abs(v + c[flat(a, m, n, b)]) > tol)
            throw InvalidArgument(
                "RankFourTensor: first pair is not antisymmetric");
          if (std::abs(v + c[flat(m, a, b, n)]) > tol)
            throw InvalidArgument(
                "RankFourTensor: second pair is not antisymmetric");
        }
      }
    }
  }
  return t;
}

RankFourTensor RankFourTensor::symmetrized(const std::array<double, 256>& c) {
  std::array<double, 256> out;
  for (int m = 0; m < 4; ++m) {
    for (int a = 0; a < 4; ++a) {
      for (int n = 0; n < 4; ++n) {
        for (int b = 0; b < 4; ++b) {
          // Antisymmetrize within each pair, then symmetrize pair exchange.
          auto anti = [&](int p, int q, int r, int s) {
            return 0.25 * (c[flat(p, q, r, s)] - c[flat(q, p, r, s)] -
                           c[flat(p, q, s, r)] + c[flat(q, p, s, r)]);
          };
          out[flat(m, a, n, b)] = 0.5 * (anti(m, a, n, b) + anti(n, b, m, a));
        }
      }
    }
  }
  return from_components(out);
}

RankFourTensor RankFourTensor::isotropic(double d) {
  std::array<double, 256> c;
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a)
      for (int n = 0; n < 4; ++n)
        for (int b = 0; b < 4; ++b)
          c[flat(m, a, n, b)] =
              d * ((m == n && a == b ? eta_diag(m) * eta_diag(a) : 0.0) -
                   (m == b && a == n ? eta_diag(m) * eta_diag(a) : 0.0));
  return from_components(c);
}

double RankFourTensor::max_abs() const {
  double s = 0.0;
  for (double v : c_) s = std::max(s, std::abs(v));
  return s;
}

double RankFourTensor::frobenius_norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

RankFourTensor RankFourTensor::operator+(const RankFourTensor& o) const {
  RankFourTensor t;
  for (size_t i = 0; i < 256; ++i) t.c_[i] = c_[i] + o.c_[i];
  return t;
}

RankFourTensor RankFourTensor::operator-(const RankFourTensor& o) const {
  RankFourTensor t;
  for (size_t i = 0; i < 256; ++i) t.c_[i] = c_[i] - o.c_[i];
  return t;
}

RankFourTensor RankFourTensor::operator*(double s) const {
  RankFourTensor t;
  for (size_t i = 0; i < 256; ++i) t.c_[i] = s * c_[i];
  return t;
}

Mat4 contract_pair(const RankFourTensor& t, const Mat4& s_lower) {
  Mat4 out = Mat4::Zero();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) sum += t(m, a, n, b) * s_lower(a, b);
      out(m, n) = sum;
    }
  return out;
}

RankFourTensor metric_pair_form(const Mat4& g_upper, double lambda) {
  std::array<double, 256> c;
  size_t idx = 0;
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a)
      for (int n = 0; n < 4; ++n)
        for (int b = 0; b < 4; ++b)
          c[idx++] =
              lambda * (g_upper(m, n) * g_upper(a, b) -
                        g_upper(m, b) * g_upper(a, n));
  return RankFourTensor::from_components(c);
}

double frobenius_inner(const RankFourTensor& a, const RankFourTensor& b) {
  double s = 0.0;
  const auto& ca = a.components();
  const auto& cb = b.components();
  for (size_t i = 0; i < 256; ++i) s += ca[i] * cb[i];
  return s;
}

}  // namespace nled
