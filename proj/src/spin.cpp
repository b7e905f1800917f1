#include "exwave/spin.hpp"

#include <cmath>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"

namespace exwave {

namespace {

double density_to_charge_ratio(const ParticleModel& model) {
  const double rho_bar = model.mean_density();
  if (rho_bar > 0.0) return rho_bar / sigma_bar(model.units, rho_bar);
  return model.units.m_e / model.units.e_charge;
}

}  // namespace

double rotation_b_field(Kind kind, const ParticleModel& model) {
  const double factor = kind == Kind::photon ? 2.0 : 1.0;
  return factor * density_to_charge_ratio(model) * model.single_mode().omega;
}

double magnetic_moment(const Units& units, double g, double s) {
  if (s < 0.0) throw InvalidArgument("spin magnitude must be non-negative");
  return g * units.e_charge / (2.0 * units.m_e * units.c0) * s;
}

SpinSolution solve_spin(Kind kind, const ParticleModel& model) {
  const Units& u = model.units;
  const WaveMode& mode = model.single_mode();
  SpinSolution sol;
  sol.kind = kind;
  sol.omega = mode.omega;
  sol.b_rotation = rotation_b_field(kind, model);
  sol.w_qt = kind == Kind::photon ? u.hbar * mode.omega : 0.5 * u.hbar * mode.omega;

  // Fields here are c0 times the classical ones, so W = mu B c0, linear in g s.
  const double per_unit_gs = magnetic_moment(u, 1.0, 1.0) * sol.b_rotation * u.c0;
  if (!(per_unit_gs > 0.0)) throw InvalidArgument("spin solution needs omega > 0");
  sol.product_gs = sol.w_qt / per_unit_gs;

  if (kind == Kind::photon) {
    sol.g_factor = 1.0;
    sol.spin = sol.product_gs;
  } else {
    // Two spin states split symmetrically about the unperturbed level.
    sol.spin = 0.5 * u.hbar;
    sol.g_factor = sol.product_gs / sol.spin;
  }
  sol.w_ed = magnetic_moment(u, sol.g_factor, sol.spin) * sol.b_rotation * u.c0;
  sol.energy_match = std::abs(sol.w_ed - sol.w_qt) <= 1e-12 * sol.w_qt;

  sol.spin_axis = normalized(cross(mode.e_prop, mode.e_trans));
  const Vec3 omega_vec = sol.spin_axis * mode.omega;
  const Vec3 spin_vec = sol.spin_axis * sol.spin;
  const double reduced = sol.spin * sol.omega;
  sol.axis_parallel = std::abs(dot(spin_vec, omega_vec) - reduced) <= 1e-12 * reduced;
  return sol;
}

std::size_t write_spin_csv(std::ostream& out, std::span<const SpinSolution> rows) {
  CsvWriter csv(out);
  csv.header({"kind", "omega", "g", "s", "gs", "W_qt", "W_ed", "match"});
  for (const auto& r : rows) {
    csv.row(to_string(r.kind), r.omega, r.g_factor, r.spin, r.product_gs, r.w_qt, r.w_ed,
            r.energy_match ? "true" : "false");
  }
  return csv.rows();
}

}  // namespace exwave
