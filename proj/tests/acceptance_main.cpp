// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fail.
//
//   nled_acceptance --cli <path-to-nled-binary> --configs <fixtures-dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nled/fresnel.hpp"
#include "nled/kinematics.hpp"
#include "nled/lagrangian.hpp"
#include "nled/polsum.hpp"
#include "nled/scenario.hpp"
#include "nled/vacuum.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace nled;
using json = nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAlpha = 1.0 / 137.035999;

std::string g_cli;
std::string g_configs;

struct CliRun {
  int exit_code = -1;
  json report;
};

CliRun run_cli_scenario(const std::string& config_text,
                        const std::string& extra_args = "") {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path cfg = dir / ("nled_acc_cfg_" + std::to_string(counter) + ".json");
  const fs::path rep = dir / ("nled_acc_rep_" + std::to_string(counter) + ".json");
  ++counter;
  std::ofstream(cfg, std::ios::binary) << config_text;

  const std::string cmd = g_cli + " run --config " + cfg.string() + " --json " +
                          rep.string() + " " + extra_args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());

  CliRun out;
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (out.exit_code == 0) {
    std::ifstream in(rep, std::ios::binary);
    in >> out.report;
  }
  fs::remove(cfg);
  fs::remove(rep);
  return out;
}

bool check(bool ok, double& worst, double value) {
  worst = std::max(worst, value);
  return ok;
}

// ---- criterion 1 --------------------------------------------------------
bool scharnhorst_formula(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  const double alphas[10] = {kAlpha, 0.5 * kAlpha, 2.0 * kAlpha, 1e-3,
                             5e-3,   1e-2,         0.1,          0.73e-3,
                             3e-2,   1.0};
  const double seps[10] = {1.0, 2.0, 0.5, 1.0, 3.0, 10.0, 1.5, 0.8, 5.0, 1.0};

  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    std::ostringstream cfg;
    cfg.precision(17);
    cfg << R"({"lagrangian": {"kind": "euler_heisenberg", "alpha": )"
        << alphas[i] << R"(}, "vacuum": {"kind": "casimir", "separation": )"
        << seps[i] << R"(}, "sweep": {"steps": 2}})";
    const CliRun run = run_cli_scenario(cfg.str());
    if (run.exit_code != 0) {
      detail = "CLI exited " + std::to_string(run.exit_code);
      return false;
    }
    const double got = run.report.at("scharnhorst_delta").get<double>();
    const double expect = 11.0 * kPi * kPi * alphas[i] * alphas[i] /
                          (8100.0 * std::pow(seps[i], 4));
    const double rel = std::abs(got - expect) / expect;
    if (!check(rel <= 1e-12, worst, rel)) {
      detail = "relative error " + std::to_string(rel);
      return false;
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  std::ostringstream d;
  d << "worst rel " << worst << ", " << ms << " ms";
  detail = d.str();
  return ms < 1000.0;
}

// ---- criterion 2 --------------------------------------------------------
bool no_casimir_birefringence(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double xi : {1e-6, 1e-2, 0.5}) {
    const RankFourTensor omega = casimir_omega_from_coefficients(
        maxwell_d1(), xi * maxwell_d1(), unit_normal_z());
    const BirefringenceReport rep = detect_birefringence(omega, 200, 1e-10);
    worst = std::max(worst, rep.max_gap);
    if (rep.birefringent || rep.max_gap > 1e-12) {
      detail = "max gap " + std::to_string(rep.max_gap);
      return false;
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  std::ostringstream d;
  d << "max gap " << worst << " over 3x200 directions, " << ms << " ms";
  detail = d.str();
  return ms < 5000.0;
}

// ---- criterion 3 --------------------------------------------------------
bool determinant_identity(std::string& detail) {
  std::mt19937_64 rng(301);
  const double d1 = maxwell_d1();
  double worst = 0.0;
  int tested = 0;
  while (tested < 500) {
    const double xi = oracles::uniform(rng, -0.5, 2.0);
    Vec3 kvec = oracles::random_vec3(rng, 2.0);
    if (kvec.norm() < 0.1) continue;
    const double w = oracles::uniform(rng, 0.3, 2.5);

    const EffectiveMetric metric =
        effective_metric_from_xi(xi, unit_normal_z());
    const FourVector k(-w, kvec.x(), kvec.y(), kvec.z(), Variance::OneForm);
    const double gkk = metric.null_form(k);
    // stay off the null cone so a relative comparison is meaningful
    if (std::abs(gkk) < 0.05 * kvec.squaredNorm()) continue;
    ++tested;

    const RankFourTensor omega =
        casimir_omega_from_coefficients(d1, xi * d1, unit_normal_z());
    const auto red = temporal_gauge_reduce(build_wave_matrix(omega, k));
    const double lhs = red.spatial.determinant();
    const double rhs = -(1.0 + xi) * d1 * d1 * d1 * w * w * gkk * gkk;
    const double rel = std::abs(lhs - rhs) / std::abs(rhs);
    if (!check(rel <= 1e-10, worst, rel)) {
      detail = "relative error " + std::to_string(rel);
      return false;
    }
  }
  std::ostringstream d;
  d << "worst rel " << worst << " over 500 draws";
  detail = d.str();
  return true;
}

// ---- criterion 4 --------------------------------------------------------
bool omega_squared_factor(std::string& detail) {
  std::mt19937_64 rng(401);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const RankFourTensor omega =
        oracles::random_symmetry_class_tensor(rng, 1.0);
    Vec3 khat = oracles::random_vec3(rng, 1.0);
    if (khat.norm() < 1e-3) khat = Vec3(0, 0, 1);
    khat.normalize();

    // Interpolate the degree-6 determinant polynomial from direct numeric
    // evaluations (independent of the library's polynomial expansion).
    const double nodes[7] = {-3.0, -2.0, -1.0, 0.0, 0.7, 2.0, 3.0};
    Eigen::Matrix<double, 7, 7> vander;
    Eigen::Matrix<double, 7, 1> values;
    for (int r = 0; r < 7; ++r) {
      double p = 1.0;
      for (int c = 0; c < 7; ++c) {
        vander(r, c) = p;
        p *= nodes[r];
      }
      values(r) = oracles::reduced_det(omega, khat, nodes[r]);
    }
    const Eigen::Matrix<double, 7, 1> coeffs =
        vander.fullPivLu().solve(values);
    const double scale = coeffs.cwiseAbs().maxCoeff();
    const double low = std::max(std::abs(coeffs(0)), std::abs(coeffs(1)));
    const double rel = low / scale;
    if (!check(rel <= 1e-10, worst, rel)) {
      detail = "low-order coefficient ratio " + std::to_string(rel);
      return false;
    }
  }
  std::ostringstream d;
  d << "worst low-order ratio " << worst << " over 100 draws";
  detail = d.str();
  return true;
}

// ---- criterion 5 --------------------------------------------------------
bool group_velocity_oracle(std::string& detail) {
  const double xi = 0.5;
  const RankFourTensor omega = casimir_omega_from_coefficients(
      maxwell_d1(), xi * maxwell_d1(), unit_normal_z());

  auto root = [&](const Vec3& k) {
    const double norm = k.norm();
    const QuarticDispersion q = fresnel_quartic(omega, Vec3(k / norm));
    return norm * q.nonneg_roots[0];
  };

  double worst_rel = 0.0, worst_sq = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double theta = kPi / 2 * (i + 0.5) / 50;
    const Vec3 kvec(std::sin(theta), 0.0, std::cos(theta));
    const double h = 1e-6;
    Vec3 numeric;
    for (int c = 0; c < 3; ++c) {
      Vec3 kp = kvec, km = kvec;
      kp[c] += h;
      km[c] -= h;
      numeric[c] = (root(kp) - root(km)) / (2.0 * h);
    }
    const GroupVelocity analytic = group_velocity(xi, theta);
    const double rel = (numeric - analytic.vec).norm() / analytic.vec.norm();
    if (!check(rel <= 1e-6, worst_rel, rel)) {
      detail = "gradient mismatch " + std::to_string(rel);
      return false;
    }
    const double vp = phase_velocity(xi, theta);
    const double sq = std::abs(
        analytic.norm * analytic.norm - vp * vp -
        xi * xi * std::pow(std::cos(theta) * std::sin(theta), 2) / (vp * vp));
    if (!check(sq <= 1e-12, worst_sq, sq)) {
      detail = "square relation residual " + std::to_string(sq);
      return false;
    }
  }
  std::ostringstream d;
  d << "worst gradient rel " << worst_rel << ", square residual " << worst_sq;
  detail = d.str();
  return true;
}

// ---- criterion 6 --------------------------------------------------------
bool polarization_suite(std::string& detail) {
  const double xi = 0.5;
  const RankFourTensor omega = casimir_omega_from_coefficients(
      maxwell_d1(), xi * maxwell_d1(), unit_normal_z());

  if (std::abs(normalization_coefficient(xi, 0.0) - (1.0 + xi)) > 1e-10) {
    detail = "N(0) != 1 + xi";
    return false;
  }

  double worst = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double theta = kPi / 2 * i / 50;
    const PolarizationBasis b = polarization_basis(xi, theta);
    const Vec3 k(std::sin(theta), 0.0, std::cos(theta));
    const Vec3 gk = k + xi * k.z() * Vec3(0, 0, 1);

    worst = std::max(worst, std::abs(gk.dot(b.pol1)));
    worst = std::max(worst, std::abs(gk.dot(b.pol2)));
    worst = std::max(worst,
                     std::abs(group_velocity(xi, theta).vec.dot(b.pol2)));
    if (worst > 1e-10) {
      detail = "orthogonality residual " + std::to_string(worst);
      return false;
    }

    // on-shell reduced matrix has a two-dimensional kernel
    const double s = phase_velocity(xi, theta);
    const FourVector kc(-s, k.x(), k.y(), k.z(), Variance::OneForm);
    const auto red = temporal_gauge_reduce(build_wave_matrix(omega, kc));
    Eigen::JacobiSVD<Mat3> svd(red.spatial);
    const double rank_ratio =
        svd.singularValues()(1) / svd.singularValues()(0);
    if (rank_ratio > 1e-10) {
      detail = "kernel not two-dimensional, sigma2/sigma1 " +
               std::to_string(rank_ratio);
      return false;
    }
    worst = std::max(worst, (red.spatial * b.pol1).norm() /
                                svd.singularValues()(0));
    worst = std::max(worst, (red.spatial * b.pol2).norm() /
                                svd.singularValues()(0));
    if (worst > 1e-10) {
      detail = "polarizations not in the kernel: " + std::to_string(worst);
      return false;
    }
  }
  std::ostringstream d;
  d << "worst residual " << worst << " over 51 angles";
  detail = d.str();
  return true;
}

// ---- criterion 7 --------------------------------------------------------
bool bootstrap(std::string& detail) {
  double worst = 0.0;
  for (double xi : {1e-4, 0.3}) {
    const double d1 = maxwell_d1();
    const RankFourTensor omega =
        casimir_omega_from_coefficients(d1, xi * d1, unit_normal_z());
    const double res = bootstrap_residual(
        omega, EffectiveMetric::from_xi(xi, unit_normal_z()), d1);
    if (!check(res <= 1e-12, worst, res)) {
      detail = "residual " + std::to_string(res) + " at xi " + std::to_string(xi);
      return false;
    }
  }
  std::ostringstream d;
  d << "worst residual " << worst;
  detail = d.str();
  return true;
}

// ---- criterion 8 --------------------------------------------------------
bool polsum_gap(std::string& detail) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (double xi : {1e-3, 1e-4, 1e-5}) {
    const double d1 = maxwell_d1();
    const PolsumComparison cmp =
        compare_polarization_sums(d1, xi * d1, unit_normal_z());
    const double c = cmp.leading_gap_coeff;
    if (std::abs(c + 0.5) > 0.005) {
      detail = "coefficient " + std::to_string(c) + " at xi " + std::to_string(xi);
      return false;
    }
    lo = first ? c : std::min(lo, c);
    hi = first ? c : std::max(hi, c);
    first = false;
  }
  std::ostringstream d;
  d << "coefficient range [" << lo << ", " << hi << "]";
  detail = d.str();
  return true;
}

// ---- criterion 9 --------------------------------------------------------
bool birefringence_positive_control(std::string& detail) {
  const RankFourTensor omega = background_field_omega(
      LagrangianModel::euler_heisenberg(1.0, 1.0), Vec3::Zero(),
      Vec3(0, 0, 0.1));

  const BirefringenceReport rep = detect_birefringence(omega, 200, 1e-10);
  if (!rep.birefringent) {
    detail = "no birefringence flagged";
    return false;
  }

  const QuarticDispersion q = fresnel_quartic(omega, Vec3(1, 0, 0));
  if (q.nonneg_roots.size() != 2 ||
      q.nonneg_roots[0] - q.nonneg_roots[1] <= 1e-8) {
    detail = "perpendicular roots not distinct";
    return false;
  }

  const auto oracle =
      oracles::bracketed_positive_roots(omega, Vec3(1, 0, 0), 0.5, 1.5, 40000);
  if (oracle.size() != 2) {
    detail = "oracle bracketed " + std::to_string(oracle.size()) + " roots";
    return false;
  }
  const double e1 = std::abs(q.nonneg_roots[1] - oracle[0]);
  const double e2 = std::abs(q.nonneg_roots[0] - oracle[1]);
  if (e1 > 1e-9 || e2 > 1e-9) {
    detail = "oracle mismatch " + std::to_string(std::max(e1, e2));
    return false;
  }
  std::ostringstream d;
  d << "gap " << q.nonneg_roots[0] - q.nonneg_roots[1]
    << ", oracle agreement " << std::max(e1, e2);
  detail = d.str();
  return true;
}

// ---- criterion 10 -------------------------------------------------------
bool euler_heisenberg_omega_oracle(std::string& detail) {
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double alpha = oracles::uniform(rng, 0.1, 2.0);
    const EHCoefficients c = EHCoefficients::from_alpha(alpha, 1.0);
    const FieldTensor bg = oracles::random_field(rng, 0.4);

    auto scalar = [c](const FieldTensor& f) {
      const Invariants inv = field_invariants(f, unit_normal_z());
      return -inv.f_inv / (4.0 * kPi) + c.c1 * inv.f_inv * inv.f_inv +
             c.c2 * inv.g_inv * inv.g_inv;
    };
    const RankFourTensor analytic = omega_from_lagrangian(
        LagrangianModel::euler_heisenberg(alpha, 1.0), bg);
    const RankFourTensor fd =
        oracles::finite_difference_omega(scalar, bg, 1e-4);
    const double rel =
        (analytic - fd).frobenius_norm() / analytic.frobenius_norm();
    if (!check(rel <= 1e-6, worst, rel)) {
      detail = "relative error " + std::to_string(rel);
      return false;
    }
  }
  std::ostringstream d;
  d << "worst rel " << worst << " over 20 backgrounds";
  detail = d.str();
  return true;
}

// ---- criterion 11 -------------------------------------------------------
bool figure_fixture(std::string& detail) {
  const fs::path fixture = fs::path(g_configs) / "figure_xi_half.json";
  std::ifstream in(fixture, std::ios::binary);
  if (!in) {
    detail = "fixture missing: " + fixture.string();
    return false;
  }
  std::ostringstream cfg;
  cfg << in.rdbuf();

  const fs::path csv_path = fs::temp_directory_path() / "nled_acc_fig.csv";
  const CliRun run =
      run_cli_scenario(cfg.str(), "--csv " + csv_path.string());
  if (run.exit_code != 0) {
    detail = "CLI exited " + std::to_string(run.exit_code);
    return false;
  }

  std::ifstream csv(csv_path, std::ios::binary);
  std::string line;
  std::getline(csv, line);  // header
  std::vector<std::pair<double, double>> speeds;  // (v_phase, v_group)
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string field;
    std::vector<double> cols;
    while (std::getline(row, field, ',')) cols.push_back(std::stod(field));
    if (cols.size() != 8) {
      detail = "bad CSV row width";
      return false;
    }
    speeds.emplace_back(cols[1], cols[2]);
  }
  fs::remove(csv_path);
  if (speeds.size() < 3) {
    detail = "too few rows";
    return false;
  }

  for (size_t i = 0; i < speeds.size(); ++i) {
    const bool endpoint = (i == 0 || i + 1 == speeds.size());
    const double diff = speeds[i].second - speeds[i].first;
    if (diff < -1e-14) {
      detail = "v_group below v_phase at row " + std::to_string(i);
      return false;
    }
    if (endpoint && std::abs(diff) > 1e-12) {
      detail = "speeds differ at an endpoint";
      return false;
    }
    if (!endpoint && diff <= 1e-8) {
      detail = "speeds coincide in the interior at row " + std::to_string(i);
      return false;
    }
  }
  std::ostringstream d;
  d << speeds.size() << " rows, group speed strictly above in the interior";
  detail = d.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    if (flag == "--configs") g_configs = argv[i + 1];
  }
  if (g_cli.empty() || g_configs.empty()) {
    std::cerr << "usage: nled_acceptance --cli <nled-binary> --configs <dir>\n";
    return 2;
  }

  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {"1 scharnhorst formula via CLI (rel 1e-12, < 1 s)", scharnhorst_formula},
      {"2 no casimir birefringence (gap <= 1e-12, < 5 s)",
       no_casimir_birefringence},
      {"3 determinant identity (rel 1e-10, 500 draws)", determinant_identity},
      {"4 omega^2 factor of det(A^ij) (1e-10 scale, 100 draws)",
       omega_squared_factor},
      {"5 group velocity oracle (rel 1e-6; square relation 1e-12)",
       group_velocity_oracle},
      {"6 polarization suite (1e-10 over theta grid)", polarization_suite},
      {"7 bootstrap residual (<= 1e-12)", bootstrap},
      {"8 polarization-sum gap coefficient (-0.5 +- 1%)", polsum_gap},
      {"9 birefringence positive control (B = 0.1, root oracle)",
       birefringence_positive_control},
      {"10 euler-heisenberg omega vs finite differences (rel 1e-6)",
       euler_heisenberg_omega_oracle},
      {"11 figure fixture: group speed above phase speed", figure_fixture},
  };

  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
            << " (" << failures << " failed, " << secs << " s total)\n";
  return failures == 0 ? 0 : 1;
}
