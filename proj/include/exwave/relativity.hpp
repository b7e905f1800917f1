#pragma once

#include <array>
#include <ostream>
#include <span>
#include <vector>

#include "exwave/fields.hpp"
#include "exwave/pde.hpp"
#include "exwave/units.hpp"

namespace exwave {

using Matrix4 = std::array<std::array<double, 4>, 4>;

Matrix4 operator*(const Matrix4& a, const Matrix4& b);

/// Largest entry of |L^T eta L - eta| with eta = diag(1, -1, -1, -1).
double interval_error(const Matrix4& lambda);

/// Boost along x in (c0 t, x, y, z) coordinates.
struct BoostParams {
  double v_boost = 0.0;
  double beta = 0.0;
  double gamma = 1.0;
  Matrix4 matrix{};
  double alpha_density = 1.0;  // rho' = alpha rho, resolved to gamma
};

/// Throws SuperluminalBoost for |v| >= c0.
BoostParams boost(const Units& units, double v);

/// u' = (u_x - V) / (1 - u_x V / c0^2). Throws DegenerateFrame when the
/// denominator vanishes, SuperluminalBoost for |V| >= c0 and
/// InvalidArgument for |u_x| > c0.
double velocity_addition(const Units& units, double u_x, double v);

/// Frame velocity equivalent to boosting by v1 and then by v2.
double composed_velocity(const Units& units, double v1, double v2);

/// Phase speed of the model seen from the boosted frame. The model must
/// propagate along +x.
double transformed_wave_speed(const ParticleModel& model, const BoostParams& b);

/// The model's plane wave re-expressed with speed |u'| and omega = |u'| k,
/// propagating along -x when u' < 0. Throws InvalidArgument when u' = 0.
ParticleModel transformed_model(const ParticleModel& model, const BoostParams& b);

/// wave_eq_rho residual of the transformed model.
ResidualReport transformed_wave_residual(const ParticleModel& model, const BoostParams& b,
                                         int points_per_wavelength);

struct FrameEnergyAudit {
  double beta = 0.0;
  double gamma = 1.0;
  double alpha = 1.0;
  double phi0_rest = 0.0;
  double phi0_moving = 0.0;
  double vp_rest = 0.0;
  double vp_moving = 0.0;
  double e_rest = 0.0;
  double e_moving = 0.0;

  double phi_ratio() const { return phi0_moving / phi0_rest; }
  double vp_ratio() const { return vp_moving / vp_rest; }
  double energy_ratio() const { return e_moving / e_rest; }
};

/// phi0 = rho0 u^2 scaled by alpha, V_P contracted by 1/gamma along x.
FrameEnergyAudit frame_energy_audit(const ParticleModel& model, const BoostParams& b,
                                    double alpha);
/// Same with alpha = gamma.
FrameEnergyAudit frame_energy_audit(const ParticleModel& model, const BoostParams& b);

/// Audits at beta = beta_max * i / (steps - 1), i = 0 .. steps - 1.
std::vector<FrameEnergyAudit> relativity_sweep(const ParticleModel& model, double beta_max,
                                               int steps);

std::size_t write_relativity_csv(std::ostream& out, std::span<const FrameEnergyAudit> rows);

}  // namespace exwave
