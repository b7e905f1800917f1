#include "exwave/relativity.hpp"

#include <algorithm>
#include <cmath>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"

namespace exwave {

namespace {

constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

bool along_x(const Vec3& e) {
  return std::abs(e.x - 1.0) <= 1e-12 && std::abs(e.y) <= 1e-12 && std::abs(e.z) <= 1e-12;
}

}  // namespace

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

double interval_error(const Matrix4& l) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += l[k][i] * kMetric[k] * l[k][j];
      const double target = i == j ? kMetric[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

BoostParams boost(const Units& units, double v) {
  if (!(std::abs(v) < units.c0)) throw SuperluminalBoost("boost speed must be below c0");
  BoostParams b;
  b.v_boost = v;
  b.beta = v / units.c0;
  b.gamma = 1.0 / std::sqrt(1.0 - b.beta * b.beta);
  b.alpha_density = b.gamma;
  b.matrix = {{{b.gamma, -b.beta * b.gamma, 0.0, 0.0},
               {-b.beta * b.gamma, b.gamma, 0.0, 0.0},
               {0.0, 0.0, 1.0, 0.0},
               {0.0, 0.0, 0.0, 1.0}}};
  // Rounding in gamma^2 - (beta gamma)^2 grows with gamma^2.
  if (interval_error(b.matrix) > 1e-12 * b.gamma * b.gamma)
    throw Error("boost matrix does not preserve the interval");
  return b;
}

double velocity_addition(const Units& units, double u_x, double v) {
  const double denom = 1.0 - u_x * v / (units.c0 * units.c0);
  if (denom == 0.0) throw DegenerateFrame("velocity addition denominator vanishes");
  if (!(std::abs(v) < units.c0)) throw SuperluminalBoost("frame speed must be below c0");
  if (std::abs(u_x) > units.c0) throw InvalidArgument("particle speed exceeds c0");
  return (u_x - v) / denom;
}

double composed_velocity(const Units& units, double v1, double v2) {
  return velocity_addition(units, v1, -v2);
}

double transformed_wave_speed(const ParticleModel& model, const BoostParams& b) {
  const WaveMode& mode = model.single_mode();
  if (!along_x(mode.e_prop)) throw InvalidArgument("frame analysis needs propagation along +x");
  return velocity_addition(model.units, model.speed, b.v_boost);
}

ParticleModel transformed_model(const ParticleModel& model, const BoostParams& b) {
  const double u = transformed_wave_speed(model, b);
  if (u == 0.0) throw InvalidArgument("comoving frame has no propagating wave");
  ParticleModel out = model;
  WaveMode& mode = out.modes.front();
  const double k = mode.wavenumber();
  const Vec3 dir = u > 0.0 ? Vec3{1, 0, 0} : Vec3{-1, 0, 0};
  mode = make_mode(mode.amp, dir, mode.e_trans, k, std::abs(u) * k);
  out.speed = std::abs(u);
  return out;
}

ResidualReport transformed_wave_residual(const ParticleModel& model, const BoostParams& b,
                                         int points_per_wavelength) {
  const ParticleModel moved = transformed_model(model, b);
  return residual(EquationId::wave_eq_rho, moved, build_grid(moved, points_per_wavelength));
}

FrameEnergyAudit frame_energy_audit(const ParticleModel& model, const BoostParams& b,
                                    double alpha) {
  FrameEnergyAudit a;
  a.beta = b.beta;
  a.gamma = b.gamma;
  a.alpha = alpha;
  a.phi0_rest = model.potential_amplitude();
  a.phi0_moving = alpha * a.phi0_rest;
  a.vp_rest = model.volume;
  a.vp_moving = model.volume / b.gamma;
  a.e_rest = a.phi0_rest * a.vp_rest;
  a.e_moving = a.phi0_moving * a.vp_moving;
  return a;
}

FrameEnergyAudit frame_energy_audit(const ParticleModel& model, const BoostParams& b) {
  return frame_energy_audit(model, b, b.alpha_density);
}

std::vector<FrameEnergyAudit> relativity_sweep(const ParticleModel& model, double beta_max,
                                               int steps) {
  if (steps < 1) throw InvalidArgument("sweep needs at least one step");
  if (!(beta_max >= 0.0 && beta_max < 1.0))
    throw SuperluminalBoost("beta_max must lie in [0, 1)");
  std::vector<FrameEnergyAudit> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double beta = steps == 1 ? 0.0 : beta_max * i / (steps - 1);
    rows.push_back(frame_energy_audit(model, boost(model.units, beta * model.units.c0)));
  }
  return rows;
}

std::size_t write_relativity_csv(std::ostream& out, std::span<const FrameEnergyAudit> rows) {
  CsvWriter csv(out);
  csv.header({"beta", "gamma", "phi_ratio", "vp_ratio", "energy_ratio"});
  for (const auto& r : rows)
    csv.row(r.beta, r.gamma, r.phi_ratio(), r.vp_ratio(), r.energy_ratio());
  return csv.rows();
}

}  // namespace exwave
