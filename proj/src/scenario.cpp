#include "nled/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "nled/kinematics.hpp"
#include "nled/polsum.hpp"
#include "nled/vacuum.hpp"

namespace nled {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.5707963267948966;

[[noreturn]] void config_fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      config_fail(path.empty() ? it.key() : path + "." + it.key(),
                  "unknown key");
  }
}

double require_number(const json& v, const std::string& path) {
  if (!v.is_number()) config_fail(path, "expected a number");
  return v.get<double>();
}

int require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) config_fail(path, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& v, const std::string& path) {
  if (!v.is_string()) config_fail(path, "expected a string");
  return v.get<std::string>();
}

Vec3 require_vec3(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3)
    config_fail(path, "expected an array of 3 numbers");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[static_cast<size_t>(i)].is_number())
      config_fail(path, "expected an array of 3 numbers");
    out[i] = v[static_cast<size_t>(i)].get<double>();
  }
  if (!out.allFinite()) config_fail(path, "components must be finite");
  return out;
}

void parse_lagrangian(const json& obj, LagrangianConfig* cfg) {
  reject_unknown_keys(obj, "lagrangian",
                      {"kind", "alpha", "m_e", "derivatives"});
  std::string kind = "euler_heisenberg";
  if (obj.contains("kind")) kind = require_string(obj["kind"], "lagrangian.kind");
  if (kind == "maxwell") {
    cfg->kind = LagrangianKind::Maxwell;
  } else if (kind == "euler_heisenberg") {
    cfg->kind = LagrangianKind::EulerHeisenberg;
  } else if (kind == "custom") {
    cfg->kind = LagrangianKind::Custom;
  } else {
    config_fail("lagrangian.kind",
                "must be one of maxwell, euler_heisenberg, custom");
  }

  if (obj.contains("alpha")) {
    cfg->alpha = require_number(obj["alpha"], "lagrangian.alpha");
    if (!(cfg->alpha >= 0.0) || !std::isfinite(cfg->alpha))
      config_fail("lagrangian.alpha", "must be >= 0");
  }
  if (obj.contains("m_e")) {
    cfg->m_e = require_number(obj["m_e"], "lagrangian.m_e");
    if (!(cfg->m_e > 0.0)) config_fail("lagrangian.m_e", "must be > 0");
  }

  if (obj.contains("derivatives")) {
    if (cfg->kind != LagrangianKind::Custom)
      config_fail("lagrangian.derivatives", "only valid for kind custom");
    const json& d = obj["derivatives"];
    if (!d.is_object()) config_fail("lagrangian.derivatives", "expected an object");
    reject_unknown_keys(d, "lagrangian.derivatives",
                        {"L_F", "L_G", "L_FF", "L_GG", "L_FG"});
    const char* names[5] = {"L_F", "L_G", "L_FF", "L_GG", "L_FG"};
    std::array<double, 5> vals{};
    for (int i = 0; i < 5; ++i) {
      if (!d.contains(names[i]))
        config_fail(std::string("lagrangian.derivatives.") + names[i],
                    "missing");
      vals[static_cast<size_t>(i)] = require_number(
          d[names[i]], std::string("lagrangian.derivatives.") + names[i]);
    }
    cfg->derivatives = vals;
  } else if (cfg->kind == LagrangianKind::Custom) {
    config_fail("lagrangian.derivatives", "required for kind custom");
  }
}

void parse_vacuum(const json& obj, VacuumConfig* cfg) {
  reject_unknown_keys(obj, "vacuum",
                      {"kind", "separation", "E", "B", "d1", "d2", "xi"});
  if (!obj.contains("kind")) config_fail("vacuum.kind", "missing");
  const std::string kind = require_string(obj["kind"], "vacuum.kind");
  if (kind == "casimir") {
    cfg->kind = VacuumKind::Casimir;
  } else if (kind == "background_field") {
    cfg->kind = VacuumKind::BackgroundField;
  } else if (kind == "raw_omega") {
    cfg->kind = VacuumKind::RawOmega;
  } else {
    config_fail("vacuum.kind",
                "must be one of casimir, background_field, raw_omega");
  }

  if (obj.contains("separation")) {
    if (cfg->kind != VacuumKind::Casimir)
      config_fail("vacuum.separation", "only valid for kind casimir");
    cfg->separation = require_number(obj["separation"], "vacuum.separation");
    if (!(cfg->separation > 0.0))
      config_fail("vacuum.separation", "must be > 0");
  }

  for (const char* name : {"E", "B"}) {
    if (!obj.contains(name)) continue;
    if (cfg->kind != VacuumKind::BackgroundField)
      config_fail(std::string("vacuum.") + name,
                  "only valid for kind background_field");
    const Vec3 v = require_vec3(obj[name], std::string("vacuum.") + name);
    if (name[0] == 'E')
      cfg->e_field = v;
    else
      cfg->b_field = v;
  }

  auto opt_num = [&](const char* name) -> std::optional<double> {
    if (!obj.contains(name)) return std::nullopt;
    if (cfg->kind == VacuumKind::BackgroundField)
      config_fail(std::string("vacuum.") + name,
                  "not applicable to kind background_field");
    const double v = require_number(obj[name], std::string("vacuum.") + name);
    if (!std::isfinite(v))
      config_fail(std::string("vacuum.") + name, "must be finite");
    return v;
  };
  cfg->d1_override = opt_num("d1");
  cfg->d2_override = opt_num("d2");
  cfg->xi_override = opt_num("xi");
  if (cfg->d2_override && cfg->xi_override)
    config_fail("vacuum.xi", "conflicts with vacuum.d2");
  if (cfg->d1_override && *cfg->d1_override == 0.0)
    config_fail("vacuum.d1", "must be nonzero");
  if (cfg->kind == VacuumKind::RawOmega && !cfg->d2_override &&
      !cfg->xi_override)
    config_fail("vacuum.kind", "raw_omega requires vacuum.d2 or vacuum.xi");
}

void parse_sweep(const json& obj, SweepConfig* cfg) {
  reject_unknown_keys(obj, "sweep", {"theta_start", "theta_end", "steps"});
  if (obj.contains("theta_start"))
    cfg->theta_start = require_number(obj["theta_start"], "sweep.theta_start");
  if (obj.contains("theta_end"))
    cfg->theta_end = require_number(obj["theta_end"], "sweep.theta_end");
  if (obj.contains("steps"))
    cfg->steps = require_int(obj["steps"], "sweep.steps");

  const double eps = 1e-12;
  if (!(cfg->theta_start >= -eps && cfg->theta_start <= kHalfPi + eps))
    config_fail("sweep.theta_start", "must lie in [0, pi/2]");
  if (!(cfg->theta_end >= -eps && cfg->theta_end <= kHalfPi + eps))
    config_fail("sweep.theta_end", "must lie in [0, pi/2]");
  if (cfg->theta_start > cfg->theta_end)
    config_fail("sweep.theta_start", "must not exceed sweep.theta_end");
  if (cfg->steps < 2) config_fail("sweep.steps", "must be >= 2");
}

void parse_birefringence(const json& obj, BirefringenceConfig* cfg) {
  reject_unknown_keys(obj, "birefringence", {"n_dirs", "tol"});
  if (obj.contains("n_dirs"))
    cfg->n_dirs = require_int(obj["n_dirs"], "birefringence.n_dirs");
  if (obj.contains("tol"))
    cfg->tol = require_number(obj["tol"], "birefringence.tol");
  if (cfg->n_dirs < 16) config_fail("birefringence.n_dirs", "must be >= 16");
  if (!(cfg->tol > 0.0)) config_fail("birefringence.tol", "must be > 0");
}

void parse_outputs(const json& obj, OutputConfig* cfg) {
  reject_unknown_keys(obj, "outputs", {"csv", "json"});
  if (obj.contains("csv"))
    cfg->csv_path = require_string(obj["csv"], "outputs.csv");
  if (obj.contains("json"))
    cfg->json_path = require_string(obj["json"], "outputs.json");
}

LagrangianModel build_model(const LagrangianConfig& cfg) {
  switch (cfg.kind) {
    case LagrangianKind::Maxwell:
      return LagrangianModel::maxwell();
    case LagrangianKind::EulerHeisenberg:
      return LagrangianModel::euler_heisenberg(cfg.alpha, cfg.m_e);
    case LagrangianKind::Custom: {
      const auto& d = *cfg.derivatives;
      return LagrangianModel::custom_from_values(d[0], d[1], d[2], d[3], d[4]);
    }
  }
  throw ConfigError("lagrangian.kind: unreachable");
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json metric_to_json(const EffectiveMetric& m) {
  auto mat = [](const Mat4& a) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < 4; ++j) row.push_back(a(i, j));
      rows.push_back(row);
    }
    return rows;
  };
  ordered_json out;
  out["gamma"] = mat(m.gamma);
  out["g"] = mat(m.g);
  return out;
}

// Central-difference gradient of omega(k) = |k| s1(khat) for sweeps through
// birefringent states, where no closed-form kinematics exists.
Vec3 numeric_group_velocity(const RankFourTensor& omega_t, const Vec3& khat) {
  const double h = 1e-6;
  auto root = [&](const Vec3& k) {
    const double norm = k.norm();
    const QuarticDispersion q = fresnel_quartic(omega_t, Vec3(k / norm));
    if (q.nonneg_roots.empty())
      throw OmegaDegenerateError("group velocity: no nonnegative root");
    return norm * q.nonneg_roots[0];
  };
  Vec3 grad;
  for (int i = 0; i < 3; ++i) {
    Vec3 kp = khat;
    Vec3 km = khat;
    kp[i] += h;
    km[i] -= h;
    grad[i] = (root(kp) - root(km)) / (2.0 * h);
  }
  return grad;
}

Vec3 mode_polarization(const RankFourTensor& omega_t, const Vec3& khat,
                       double s) {
  const auto red = temporal_gauge_reduce(build_wave_matrix(
      omega_t, FourVector(-s, khat.x(), khat.y(), khat.z(),
                          Variance::OneForm)));
  Eigen::JacobiSVD<Mat3> svd(red.spatial, Eigen::ComputeFullV);
  Vec3 pol = svd.matrixV().col(2);
  if (pol.x() < -1e-12 || (std::abs(pol.x()) <= 1e-12 && pol.z() > 0.0))
    pol = -pol;
  return pol;
}

}  // namespace

ScenarioConfig validate_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: expected a JSON object");

  reject_unknown_keys(root, "",
                      {"lagrangian", "vacuum", "sweep", "birefringence",
                       "outputs"});

  ScenarioConfig cfg;
  if (root.contains("lagrangian")) {
    if (!root["lagrangian"].is_object())
      config_fail("lagrangian", "expected an object");
    parse_lagrangian(root["lagrangian"], &cfg.lagrangian);
  }
  if (!root.contains("vacuum")) config_fail("vacuum.kind", "missing");
  if (!root["vacuum"].is_object()) config_fail("vacuum", "expected an object");
  parse_vacuum(root["vacuum"], &cfg.vacuum);
  if (root.contains("sweep")) {
    if (!root["sweep"].is_object()) config_fail("sweep", "expected an object");
    parse_sweep(root["sweep"], &cfg.sweep);
  }
  if (root.contains("birefringence")) {
    if (!root["birefringence"].is_object())
      config_fail("birefringence", "expected an object");
    parse_birefringence(root["birefringence"], &cfg.birefringence);
  }
  if (root.contains("outputs")) {
    if (!root["outputs"].is_object())
      config_fail("outputs", "expected an object");
    parse_outputs(root["outputs"], &cfg.outputs);
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return validate_config(ss.str());
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  const LagrangianModel model = build_model(config.lagrangian);
  const FourVector normal = unit_normal_z();

  RankFourTensor omega;
  std::optional<double> d1_known;
  std::optional<double> d2_known;

  switch (config.vacuum.kind) {
    case VacuumKind::Casimir: {
      const double d1 = config.vacuum.d1_override.value_or(maxwell_d1());
      double d2;
      if (config.vacuum.d2_override) {
        d2 = *config.vacuum.d2_override;
      } else if (config.vacuum.xi_override) {
        d2 = *config.vacuum.xi_override * d1;
      } else {
        d2 = casimir_d2_from_model(model, config.vacuum.separation);
      }
      omega = casimir_omega_from_coefficients(d1, d2, normal);
      d1_known = d1;
      d2_known = d2;
      break;
    }
    case VacuumKind::RawOmega: {
      const double d1 = config.vacuum.d1_override.value_or(maxwell_d1());
      const double d2 = config.vacuum.d2_override
                            ? *config.vacuum.d2_override
                            : *config.vacuum.xi_override * d1;
      omega = casimir_omega_from_coefficients(d1, d2, normal);
      d1_known = d1;
      d2_known = d2;
      break;
    }
    case VacuumKind::BackgroundField: {
      omega = background_field_omega(model, config.vacuum.e_field,
                                     config.vacuum.b_field);
      break;
    }
  }

  const BirefringenceReport bireport = detect_birefringence(
      omega, config.birefringence.n_dirs, config.birefringence.tol);

  ScenarioResult result;
  result.birefringent = bireport.birefringent;
  result.max_root_gap = bireport.max_gap;

  const int steps = config.sweep.steps;
  auto theta_at = [&](int i) {
    if (i == steps - 1) return config.sweep.theta_end;
    return config.sweep.theta_start +
           (config.sweep.theta_end - config.sweep.theta_start) * i /
               (steps - 1);
  };
  auto direction_at = [](double theta) {
    return Vec3(std::sin(theta), 0.0, std::cos(theta));
  };

  if (!result.birefringent) {
    const MetricFit fit =
        fit_effective_metric(omega, config.birefringence.n_dirs);
    result.metric_fit_rms = fit.residual_rms;

    const double d1 =
        d1_known ? *d1_known : decompose_omega(omega).d1;
    double xi;
    std::optional<EffectiveMetric> gamma;
    if (d2_known) {
      xi = *d2_known / d1;
      gamma = EffectiveMetric::from_xi(xi, normal);
    } else {
      gamma = fit.metric;
      xi = fit.metric.axial_xi(normal);
    }
    const double d2 = d2_known ? *d2_known : xi * d1;

    result.d1 = d1;
    result.d2 = d2;
    result.xi = xi;
    result.gamma = gamma;
    result.scharnhorst_delta = 0.5 * xi;
    result.bootstrap_residual_gamma = bootstrap_residual(omega, *gamma, d1);
    try {
      const EffectiveMetric gt = minkowski_polsum_metric(d1, d2, normal);
      result.gamma_tilde = gt;
      result.bootstrap_residual_gamma_tilde =
          bootstrap_residual(omega, gt, d1);
    } catch (const Error&) {
      // Reported as null when the flat-metric sum has no usable metric.
    }

    result.rows.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
      const double theta = theta_at(i);
      const PropagationState st = propagation_state(xi, theta);
      const QuarticDispersion q =
          fresnel_quartic(omega, direction_at(theta));
      SweepRow row;
      row.theta = theta;
      row.v_phase = st.v_phase;
      row.v_group = st.v_group;
      row.ray_angle = st.ray_angle;
      row.eps2_x = st.pol2.x();
      row.eps2_z = st.pol2.z();
      row.n_theta = st.n_theta;
      row.root_gap = q.gap();
      result.rows.push_back(row);
    }
  } else {
    // No single metric exists; report the isotropic projection coefficient
    // and the per-direction fast-mode data.
    result.d1 = d1_known ? *d1_known : decompose_omega(omega).d1;
    result.rows.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
      const double theta = theta_at(i);
      const Vec3 khat = direction_at(theta);
      const QuarticDispersion q = fresnel_quartic(omega, khat);
      if (q.nonneg_roots.size() < 2)
        throw OmegaDegenerateError("sweep: fewer than two phase speeds");
      const Vec3 vg = numeric_group_velocity(omega, khat);
      const Vec3 pol = mode_polarization(omega, khat, q.nonneg_roots[0]);
      SweepRow row;
      row.theta = theta;
      row.v_phase = q.nonneg_roots[0];
      row.v_group = vg.norm();
      row.ray_angle = std::atan2(std::hypot(vg.x(), vg.y()), vg.z());
      row.eps2_x = pol.x();
      row.eps2_z = pol.z();
      row.n_theta = std::numeric_limits<double>::quiet_NaN();
      row.root_gap = q.gap();
      result.rows.push_back(row);
    }
  }
  return result;
}

std::string render_csv(const ScenarioResult& result) {
  std::string out =
      "theta,v_phase,v_group,ray_angle,eps2_x,eps2_z,N_theta,root_gap\n";
  for (const SweepRow& r : result.rows) {
    out += format_g17(r.theta);
    out += ',';
    out += format_g17(r.v_phase);
    out += ',';
    out += format_g17(r.v_group);
    out += ',';
    out += format_g17(r.ray_angle);
    out += ',';
    out += format_g17(r.eps2_x);
    out += ',';
    out += format_g17(r.eps2_z);
    out += ',';
    out += format_g17(r.n_theta);
    out += ',';
    out += format_g17(r.root_gap);
    out += '\n';
  }
  return out;
}

std::string render_json_report(const ScenarioResult& result) {
  ordered_json j;
  auto set_opt = [&](const char* key, const std::optional<double>& v) {
    if (v)
      j[key] = *v;
    else
      j[key] = nullptr;
  };
  set_opt("d1", result.d1);
  set_opt("d2", result.d2);
  set_opt("xi", result.xi);
  if (result.gamma) {
    const ordered_json m = metric_to_json(*result.gamma);
    j["gamma"] = m["gamma"];
    j["g"] = m["g"];
  } else {
    j["gamma"] = nullptr;
    j["g"] = nullptr;
  }
  if (result.gamma_tilde)
    j["gamma_tilde"] = metric_to_json(*result.gamma_tilde)["gamma"];
  else
    j["gamma_tilde"] = nullptr;
  set_opt("bootstrap_residual_gamma", result.bootstrap_residual_gamma);
  set_opt("bootstrap_residual_gamma_tilde",
          result.bootstrap_residual_gamma_tilde);
  j["birefringent"] = result.birefringent;
  j["max_root_gap"] = result.max_root_gap;
  set_opt("metric_fit_rms", result.metric_fit_rms);
  set_opt("scharnhorst_delta", result.scharnhorst_delta);
  return j.dump(2) + "\n";
}

std::string write_outputs(const ScenarioResult& result,
                          const ScenarioConfig& config,
                          const std::string& csv_override,
                          const std::string& json_override) {
  const std::string csv_path =
      csv_override.empty() ? config.outputs.csv_path : csv_override;
  const std::string json_path =
      json_override.empty() ? config.outputs.json_path : json_override;

  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw IoError("cannot open CSV output: " + csv_path);
    out << render_csv(result);
    if (!out) throw IoError("failed writing CSV output: " + csv_path);
  }

  const std::string report = render_json_report(result);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw IoError("cannot open JSON output: " + json_path);
    out << report;
    if (!out) throw IoError("failed writing JSON output: " + json_path);
  }
  return report;
}

}  // namespace nled
