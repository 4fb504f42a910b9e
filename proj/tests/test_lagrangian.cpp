#include <doctest.h>

#include <random>

#include "nled/lagrangian.hpp"
#include "nled/vacuum.hpp"
#include "oracles.hpp"

using namespace nled;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Closed-form quartic scalar Lagrangian used by the finite-difference oracle.
std::function<double(const FieldTensor&)> eh_scalar(double alpha, double m_e) {
  const EHCoefficients c = EHCoefficients::from_alpha(alpha, m_e);
  return [c](const FieldTensor& f) {
    const Invariants inv = field_invariants(f, unit_normal_z());
    return -inv.f_inv / (4.0 * kPi) + c.c1 * inv.f_inv * inv.f_inv +
           c.c2 * inv.g_inv * inv.g_inv;
  };
}

double rel_norm_diff(const RankFourTensor& a, const RankFourTensor& b) {
  return (a - b).frobenius_norm() / a.frobenius_norm();
}

}  // namespace

TEST_CASE("euler-heisenberg coefficients") {
  const EHCoefficients c = EHCoefficients::from_alpha(1.0, 1.0);
  CHECK(c.c2 == 1.75 * c.c1);  // 7/4 exactly, by construction
  // direct numeric evaluation of 1/(90 pi^2)
  CHECK(c.c1 == doctest::Approx(1.0 / (90.0 * kPi * kPi)).epsilon(1e-15));
  CHECK(c.c1 == doctest::Approx(1.12579e-3).epsilon(1e-5));

  CHECK_THROWS_AS(EHCoefficients::from_alpha(1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(EHCoefficients::from_alpha(1.0, -2.0), InvalidArgument);
  CHECK_THROWS_AS(LagrangianModel::euler_heisenberg(1.0, -1.0),
                  InvalidArgument);
}

TEST_CASE("euler-heisenberg with alpha = 0 degenerates to maxwell") {
  const LagrangianModel eh = LagrangianModel::euler_heisenberg(0.0, 1.0);
  const LagrangianModel mx = LagrangianModel::maxwell();
  for (double f : {-0.3, 0.0, 1.7}) {
    for (double g : {-1.1, 0.0, 0.4}) {
      CHECK(eh.l_f(f, g) == mx.l_f(f, g));
      CHECK(eh.l_g(f, g) == 0.0);
      CHECK(eh.l_ff(f, g) == 0.0);
      CHECK(eh.l_gg(f, g) == 0.0);
      CHECK(eh.l_fg(f, g) == 0.0);
    }
  }
}

TEST_CASE("euler-heisenberg derivative values") {
  const LagrangianModel eh = LagrangianModel::euler_heisenberg(1.0, 1.0);
  const EHCoefficients c = *eh.eh();
  const double f = 0.2, g = -0.4;
  CHECK(eh.l_f(f, g) ==
        doctest::Approx(-1.0 / (4.0 * kPi) + 2.0 * c.c1 * f).epsilon(1e-15));
  CHECK(eh.l_g(f, g) == doctest::Approx(2.0 * c.c2 * g).epsilon(1e-15));
  CHECK(eh.l_ff(f, g) == 2.0 * c.c1);
  CHECK(eh.l_gg(f, g) == 2.0 * c.c2);
  CHECK(eh.l_fg(f, g) == 0.0);
}

TEST_CASE("custom function adapter differentiates a known lagrangian") {
  // L = a F + b G + c F^2 + d G^2 + e F G has constant second derivatives.
  const double a = -0.8, b = 0.3, c = 0.25, d = -0.15, e = 0.4;
  const LagrangianModel m =
      LagrangianModel::custom_from_function([=](double f, double g) {
        return a * f + b * g + c * f * f + d * g * g + e * f * g;
      });
  const double f0 = 0.7, g0 = -0.2;
  CHECK(m.l_f(f0, g0) ==
        doctest::Approx(a + 2 * c * f0 + e * g0).epsilon(1e-9));
  CHECK(m.l_g(f0, g0) ==
        doctest::Approx(b + 2 * d * g0 + e * f0).epsilon(1e-9));
  CHECK(m.l_ff(f0, g0) == doctest::Approx(2 * c).epsilon(1e-7));
  CHECK(m.l_gg(f0, g0) == doctest::Approx(2 * d).epsilon(1e-7));
  CHECK(m.l_fg(f0, g0) == doctest::Approx(e).epsilon(1e-7));
}

TEST_CASE("omega of maxwell at zero field is the isotropic form") {
  const RankFourTensor omega =
      omega_from_lagrangian(LagrangianModel::maxwell(), FieldTensor());
  const RankFourTensor expected =
      RankFourTensor::isotropic(-1.0 / (16.0 * kPi));
  CHECK((omega - expected).max_abs() <= 1e-15);

  // The quartic terms are quadratic in the background, so they vanish at 0.
  const RankFourTensor omega_eh = omega_from_lagrangian(
      LagrangianModel::euler_heisenberg(1.0, 1.0), FieldTensor());
  CHECK((omega_eh - expected).max_abs() <= 1e-15);
}

TEST_CASE("omega matches the finite-difference oracle") {
  // Spot check at the documented example point first.
  const LagrangianModel eh = LagrangianModel::euler_heisenberg(1.0, 1.0);
  const FieldTensor bg =
      FieldTensor::from_fields(Vec3(0, 0, 0), Vec3(0, 0, 0.1));
  const RankFourTensor omega = omega_from_lagrangian(eh, bg);
  const RankFourTensor fd =
      oracles::finite_difference_omega(eh_scalar(1.0, 1.0), bg, 1e-4);
  CHECK(rel_norm_diff(omega, fd) <= 1e-6);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const double alpha = oracles::uniform(rng, 0.1, 2.0);
    const FieldTensor f = oracles::random_field(rng, 0.4);
    const RankFourTensor w =
        omega_from_lagrangian(LagrangianModel::euler_heisenberg(alpha, 1.0), f);
    const RankFourTensor w_fd =
        oracles::finite_difference_omega(eh_scalar(alpha, 1.0), f, 1e-4);
    CHECK(rel_norm_diff(w, w_fd) <= 1e-6);
  }
}

TEST_CASE("omega is linear in each second-derivative coefficient") {
  std::mt19937_64 rng(22);
  const FieldTensor bg = oracles::random_field(rng, 0.5);
  auto omega_of = [&](double lff, double lgg, double lfg) {
    return omega_from_lagrangian(
        LagrangianModel::custom_from_values(-0.1, 0.05, lff, lgg, lfg), bg);
  };
  const RankFourTensor base = omega_of(0, 0, 0);
  const RankFourTensor wf = omega_of(1, 0, 0) - base;
  const RankFourTensor wg = omega_of(0, 1, 0) - base;
  const RankFourTensor wx = omega_of(0, 0, 1) - base;
  const RankFourTensor combo = omega_of(2.0, -0.7, 0.3);
  const RankFourTensor predicted =
      base + wf * 2.0 + wg * -0.7 + wx * 0.3;
  CHECK((combo - predicted).max_abs() <= 1e-13 * (1.0 + combo.max_abs()));
}

TEST_CASE("wave covector is always in the kernel (epsilon term drops)") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    // Background with E.B != 0 so the Levi-Civita term is present.
    const FieldTensor bg = oracles::random_field(rng, 0.8);
    const RankFourTensor omega = omega_from_lagrangian(
        LagrangianModel::euler_heisenberg(1.0, 1.0), bg);
    const Vec4 k(oracles::uniform(rng, -2, 2), oracles::uniform(rng, -2, 2),
                 oracles::uniform(rng, -2, 2), oracles::uniform(rng, -2, 2));
    for (int m = 0; m < 4; ++m) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int n = 0; n < 4; ++n)
          for (int b = 0; b < 4; ++b)
            sum += omega(m, a, n, b) * k[a] * k[b] * k[n];
      CHECK(std::abs(sum) <= 1e-12 * (1.0 + omega.max_abs()));
    }
  }
}

TEST_CASE("epsilon coefficient tracks L_G at the background") {
  const LagrangianModel eh = LagrangianModel::euler_heisenberg(1.0, 1.0);
  const FieldTensor bg =
      FieldTensor::from_fields(Vec3(0.3, 0, 0), Vec3(0.2, 0, 0));
  const double g = invariant_g(bg);
  CHECK(omega_epsilon_coefficient(eh, bg) ==
        doctest::Approx(0.25 * 2.0 * eh.eh()->c2 * g).epsilon(1e-14));
}

TEST_CASE("decompose_omega: projection, linearity, recomposition") {
  const double d1 = -1.0 / (16.0 * kPi);
  const OmegaDecomposition iso =
      decompose_omega(RankFourTensor::isotropic(d1));
  CHECK(iso.d1 == doctest::Approx(d1).epsilon(1e-14));
  CHECK(iso.delta.max_abs() <= 1e-16);

  std::mt19937_64 rng(24);
  const RankFourTensor omega = oracles::random_symmetry_class_tensor(rng, 1.0);
  const OmegaDecomposition dec = decompose_omega(omega);
  const RankFourTensor recomposed =
      RankFourTensor::isotropic(dec.d1) + dec.delta;
  CHECK((recomposed - omega).max_abs() <= 1e-13);

  const double shift = 0.37;
  const OmegaDecomposition shifted =
      decompose_omega(omega + RankFourTensor::isotropic(shift));
  CHECK(shifted.d1 == doctest::Approx(dec.d1 + shift).epsilon(1e-12));
  CHECK((shifted.delta - dec.delta).max_abs() <= 1e-13);
}

TEST_CASE("decompose_omega on the axial form: frozen offset to the traces") {
  // The axial anisotropy is not Frobenius-orthogonal to the isotropic
  // direction: <Delta(d2), Iso>/<Iso, Iso> = 12 d2 / 24. The projection
  // therefore reports d1 + d2/2, while the trace identities recover the
  // axial coefficients exactly.
  const double d1 = -1.0 / (16.0 * kPi);
  const double d2 = 0.01 * d1;
  const RankFourTensor omega =
      casimir_omega_from_coefficients(d1, d2, unit_normal_z());

  const oracles::AxialCoefficients tr =
      oracles::trace_coefficients(omega, unit_normal_z());
  CHECK(tr.d1 == doctest::Approx(d1).epsilon(1e-13));
  CHECK(tr.d2 == doctest::Approx(d2).epsilon(1e-13));

  const OmegaDecomposition dec = decompose_omega(omega);
  CHECK(dec.d1 == doctest::Approx(d1 + 0.5 * d2).epsilon(1e-12));
}
