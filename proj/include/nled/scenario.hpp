#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nled/effective_metric.hpp"
#include "nled/fresnel.hpp"
#include "nled/lagrangian.hpp"

namespace nled {

enum class VacuumKind { Casimir, BackgroundField, RawOmega };

struct LagrangianConfig {
  LagrangianKind kind = LagrangianKind::EulerHeisenberg;
  double alpha = 1.0 / 137.035999;
  double m_e = 1.0;
  // L_F, L_G, L_FF, L_GG, L_FG at the background; required for kind custom.
  std::optional<std::array<double, 5>> derivatives;
};

struct VacuumConfig {
  VacuumKind kind = VacuumKind::Casimir;
  double separation = 1.0;  // plate distance in units of 1/m_e
  Vec3 e_field = Vec3::Zero();
  Vec3 b_field = Vec3::Zero();
  std::optional<double> d1_override;
  std::optional<double> d2_override;
  std::optional<double> xi_override;
};

struct SweepConfig {
  double theta_start = 0.0;
  double theta_end = 1.5707963267948966;  // pi/2
  int steps = 64;
};

struct BirefringenceConfig {
  int n_dirs = 200;
  double tol = 1e-10;
};

struct OutputConfig {
  std::string csv_path;   // empty: no CSV written
  std::string json_path;  // empty: report goes to stdout
};

struct ScenarioConfig {
  LagrangianConfig lagrangian;
  VacuumConfig vacuum;
  SweepConfig sweep;
  BirefringenceConfig birefringence;
  OutputConfig outputs;
};

// Strict parse of a JSON document: unknown keys are rejected, every
// validation error names the offending path. Throws ConfigError.
ScenarioConfig validate_config(const std::string& json_text);
ScenarioConfig load_config_file(const std::string& path);  // IoError/ConfigError

// One line of the angle sweep (fixed CSV column order).
struct SweepRow {
  double theta = 0.0;
  double v_phase = 1.0;
  double v_group = 1.0;
  double ray_angle = 0.0;
  double eps2_x = 0.0;
  double eps2_z = 0.0;
  double n_theta = 1.0;
  double root_gap = 0.0;
};

struct ScenarioResult {
  bool birefringent = false;
  double max_root_gap = 0.0;
  std::optional<double> metric_fit_rms;
  std::optional<double> d1;
  std::optional<double> d2;
  std::optional<double> xi;
  std::optional<double> scharnhorst_delta;  // first-order v_phase(0) - 1
  std::optional<EffectiveMetric> gamma;
  std::optional<EffectiveMetric> gamma_tilde;
  std::optional<double> bootstrap_residual_gamma;
  std::optional<double> bootstrap_residual_gamma_tilde;
  std::vector<SweepRow> rows;
};

// Lagrangian -> Omega -> Fresnel -> kinematics sweep. Pure apart from the
// floating-point pipeline; identical configs produce identical results.
ScenarioResult run_scenario(const ScenarioConfig& config);

// Fixed column order, 17 significant digits, '\n' line endings.
std::string render_csv(const ScenarioResult& result);
std::string render_json_report(const ScenarioResult& result);

// Writes whichever outputs have paths (after applying the overrides); returns
// the JSON text so callers without a json path can print it.
std::string write_outputs(const ScenarioResult& result,
                          const ScenarioConfig& config,
                          const std::string& csv_override,
                          const std::string& json_override);

}  // namespace nled
