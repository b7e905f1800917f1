#include "exwave/energetics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"

namespace exwave {

namespace {

// Rectangle rule along e_prop; the fields are uniform across the transverse
// section, so the area factors out.
template <typename F>
double integrate_box(const ParticleModel& model, int points_per_wavelength, F density) {
  if (points_per_wavelength < 1) throw InvalidArgument("quadrature needs at least one point");
  const WaveMode& mode = model.single_mode();
  const int count = points_per_wavelength * model.box_wavelengths;
  const double dx = model.box_length() / count;
  double sum = 0.0;
  for (int i = 0; i < count; ++i) sum += density(mode.e_prop * (i * dx));
  return sum * dx * model.transverse_area();
}

}  // namespace

double integrated_mass(const ParticleModel& model, int quadrature_points) {
  return integrate_box(model, quadrature_points,
                       [&](const Vec3& r) { return mass_density(model, r, 0.0); });
}

EnergyPartition energy_partition(const ParticleModel& model, int quadrature_points) {
  if (model.kind != Kind::electron)
    throw WrongKind("energy_partition is defined for electrons; use photon_energy_relation");
  const double u2 = model.speed * model.speed;
  EnergyPartition e;
  e.w_kinetic = 0.5 * u2 * integrated_mass(model, quadrature_points);
  e.w_total = 0.5 * integrate_box(model, quadrature_points, [&](const Vec3& r) {
                return mass_density(model, r, 0.0) * u2 + intrinsic_potential(model, r, 0.0);
              });
  e.w_potential = e.w_total - e.w_kinetic;
  e.omega_implied = e.w_total / model.units.hbar;
  return e;
}

PhaseVelocity phase_velocity_check(const ParticleModel& model) {
  const WaveMode& mode = model.single_mode();
  return {mode.omega / mode.wavenumber(), 0.5 * model.speed};
}

double kinetic_operator_check(const ParticleModel& model, const Grid& grid) {
  if (model.kind != Kind::electron) throw WrongKind("kinetic operator needs a massive particle");
  if (grid.points_per_wavelength < kMinPointsPerWavelength)
    throw InvalidGrid("grid too coarse: need at least 8 points per wavelength");
  const WaveMode& mode = model.single_mode();
  const Units& u = model.units;
  const Lattice lat(grid);
  auto psi = lat.sample<double>([&](const Vec3& r, double t) { return wavefunction(mode, r, t); });
  auto lap = lat.laplacian(psi);
  const double kinetic = -u.hbar * u.hbar / (2.0 * u.m_e);
  const double half_quantum = 0.5 * u.hbar * mode.omega;
  const auto n = grid.counts();
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n[0]; ++i) {
    for (int j = 0; j < n[1]; ++j) {
      for (int l = 0; l < n[2]; ++l) {
        const Site s{i, j, l, 0};
        const double v = psi(s);
        num = std::max(num, std::abs(kinetic * lap(s) - half_quantum * v));
        den = std::max(den, std::abs(half_quantum * v));
      }
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

std::vector<double> photon_energy_relation(const ParticleModel& model) {
  if (model.kind != Kind::photon) throw WrongKind("photon_energy_relation needs a photon model");
  const double c0 = model.units.c0;
  std::vector<double> ratios;
  ratios.reserve(model.modes.size());
  for (const auto& mode : model.modes) {
    // p0 k - (omega / c0^2) phi0 = 0
    const double phi0 = model.momentum_amplitude(mode) * mode.wavenumber() * c0 * c0 / mode.omega;
    ratios.push_back(phi0 / (model.rho0 * c0 * c0));
  }
  return ratios;
}

TransferRate transfer_rate(const Units& units, double frequency, double alpha_fraction) {
  if (!(frequency > 0.0)) throw InvalidArgument("frequency must be positive");
  if (!(alpha_fraction > 0.0 && alpha_fraction <= 1.0))
    throw InvalidArgument("alpha fraction must lie in (0, 1]");
  const double h = units.planck_h();
  TransferRate t;
  t.frequency = frequency;
  t.period = 1.0 / frequency;
  t.alpha_fraction = alpha_fraction;
  // A lambda rho c^2 folds into alpha V_ph rho c^2 = alpha h nu
  t.alpha_rate = alpha_fraction * h * frequency / t.period;
  // hbar omega / tau
  t.rate = units.hbar * (2.0 * std::numbers::pi * frequency) / t.period;
  return t;
}

std::size_t write_partition_csv(std::ostream& out, const EnergyPartition& e) {
  CsvWriter csv(out);
  csv.header({"quantity", "value"});
  csv.row("w_kinetic", e.w_kinetic);
  csv.row("w_potential", e.w_potential);
  csv.row("w_total", e.w_total);
  csv.row("omega_implied", e.omega_implied);
  return csv.rows();
}

std::size_t write_transfer_csv(std::ostream& out, std::span<const TransferRate> rows) {
  CsvWriter csv(out);
  csv.header({"nu", "alpha", "rate"});
  for (const auto& r : rows) csv.row(r.frequency, r.alpha_fraction, r.rate);
  return csv.rows();
}

}  // namespace exwave
