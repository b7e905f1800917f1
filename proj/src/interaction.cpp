#include "exwave/interaction.hpp"

#include <algorithm>
#include <cmath>
#include "json.hpp"

#include "exwave/errors.hpp"

namespace exwave {

PotentialProfile::PotentialProfile(std::vector<double> positions, std::vector<double> values)
    : x_(std::move(positions)), v_(std::move(values)) {
  if (x_.size() != v_.size() || x_.size() < 2)
    throw InvalidArgument("potential profile needs at least two matching samples");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(v_[i]))
      throw InvalidArgument("potential profile must be finite");
    if (i > 0 && !(x_[i] > x_[i - 1]))
      throw InvalidArgument("potential profile positions must increase strictly");
  }
}

PotentialProfile PotentialProfile::constant(double value, double x_min, double x_max) {
  return PotentialProfile({x_min, x_max}, {value, value});
}

double PotentialProfile::operator()(double x) const {
  if (x < x_.front() || x > x_.back())
    throw OutOfDomain("position outside the potential profile");
  const auto hi = std::upper_bound(x_.begin(), x_.end(), x);
  if (hi == x_.end()) return v_.back();
  const auto i = static_cast<std::size_t>(hi - x_.begin());
  const double w = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
  return v_[i - 1] + w * (v_[i] - v_[i - 1]);
}

PotentialProfile PotentialProfile::scaled(double factor) const {
  PotentialProfile p = *this;
  for (auto& v : p.v_) v *= factor;
  return p;
}

double emitted_photon_density(const InteractionScenario& s) {
  return s.rho_el0 * (s.xdot_sq_final - s.xdot_sq_initial) / (s.c0 * s.c0);
}

double lagrangian_density(const InteractionScenario& s, double x) {
  return s.rho_el0 * s.xdot_sq_final + emitted_photon_density(s) * s.c0 * s.c0 -
         s.sigma_el0 * s.phi_ext(x);
}

double hamiltonian(const InteractionScenario& s, double x) { return s.sigma_el0 * s.phi_ext(x); }

InteractionReport emission_balance(const InteractionScenario& s, double x) {
  if (s.xdot_sq_final < 0.0 || s.xdot_sq_initial < 0.0)
    throw InvalidArgument("squared velocities must be non-negative");
  InteractionReport r;
  r.lagrangian = lagrangian_density(s, x);
  r.hamiltonian = hamiltonian(s, x);
  // H_w = H - H_0 with H_0 = rho xdot^2 + sigma phi
  r.h_w = r.hamiltonian - (s.rho_el0 * s.xdot_sq_final + s.sigma_el0 * s.phi_ext(x));
  r.rho_ph0_emitted = emitted_photon_density(s);
  const double kinetic_gain = s.rho_el0 * (s.xdot_sq_final - s.xdot_sq_initial);
  const double emitted = r.rho_ph0_emitted * s.c0 * s.c0;
  if (s.path) {
    r.v_em = s.sigma_el0 * (s.phi_ext(s.path->first) - s.phi_ext(s.path->second));
  } else {
    r.v_em = kinetic_gain + emitted;
  }
  r.audit_residual = r.v_em - (kinetic_gain + emitted);
  return r;
}

std::string to_json(const InteractionReport& report) {
  nlohmann::ordered_json j;
  j["lagrangian"] = report.lagrangian;
  j["hamiltonian"] = report.hamiltonian;
  j["h_w"] = report.h_w;
  j["rho_ph0_emitted"] = report.rho_ph0_emitted;
  j["v_em"] = report.v_em;
  return j.dump(2);
}

}  // namespace exwave
