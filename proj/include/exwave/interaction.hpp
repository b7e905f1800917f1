#pragma once

#include <optional>
#include <string>
#include <vector>

namespace exwave {

/// Piecewise-linear external potential phi(x) on a sorted sample grid.
class PotentialProfile {
 public:
  PotentialProfile() = default;
  /// Throws InvalidArgument unless positions are strictly increasing, sizes
  /// match, there are at least two samples and all values are finite.
  PotentialProfile(std::vector<double> positions, std::vector<double> values);

  static PotentialProfile constant(double value, double x_min = -1.0, double x_max = 1.0);

  /// Throws OutOfDomain outside [front, back].
  double operator()(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  PotentialProfile scaled(double factor) const;

 private:
  std::vector<double> x_;
  std::vector<double> v_;
};

struct InteractionScenario {
  double rho_el0 = 0.0;
  double sigma_el0 = 0.0;
  PotentialProfile phi_ext = PotentialProfile::constant(0.0);
  double xdot_sq_initial = 0.0;
  double xdot_sq_final = 0.0;
  double c0 = 1.0;
  // Start and end of the electron's path through phi_ext. When set, the
  // field energy is the line integral sigma_el0 * (phi(start) - phi(end)).
  std::optional<std::pair<double, double>> path;
};

struct InteractionReport {
  double lagrangian = 0.0;
  double hamiltonian = 0.0;
  double h_w = 0.0;              // signed, -rho_el0 xdot^2
  double rho_ph0_emitted = 0.0;  // magnitude balance, >= 0 when accelerating
  double v_em = 0.0;
  // v_em - (kinetic gain + emitted energy); zero unless a path is supplied
  // whose field energy does not match the kinetic change.
  double audit_residual = 0.0;
};

/// Photon density amplitude carrying away the kinetic gain,
/// rho_el0 * (xdot_f^2 - xdot_i^2) / c0^2. Negative for deceleration, i.e. net
/// absorption.
double emitted_photon_density(const InteractionScenario& s);

/// L = rho_el0 xdot_f^2 + rho_ph0 c0^2 - sigma_el0 phi(x).
double lagrangian_density(const InteractionScenario& s, double x);

/// H = sigma_el0 phi(x); no kinetic term survives the first-order expansion.
double hamiltonian(const InteractionScenario& s, double x);

InteractionReport emission_balance(const InteractionScenario& s, double x);

/// `{"lagrangian":..,"hamiltonian":..,"h_w":..,"rho_ph0_emitted":..,"v_em":..}`
std::string to_json(const InteractionReport& report);

}  // namespace exwave
