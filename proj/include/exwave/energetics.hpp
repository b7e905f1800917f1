#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "exwave/fields.hpp"
#include "exwave/pde.hpp"
#include "exwave/units.hpp"

namespace exwave {

/// Energy content of one particle box. Kinetic density is rho u^2 / 2 and
/// the intrinsic potential contributes phi / 2, so the total density
/// (rho u^2 + phi) / 2 is constant and integrates to m u^2.
struct EnergyPartition {
  double w_kinetic = 0.0;
  double w_potential = 0.0;
  double w_total = 0.0;
  double omega_implied = 0.0;  // w_total / hbar
};

/// Periodic rectangle-rule quadrature over V_P with quadrature_points per
/// wavelength. Photons throw WrongKind; use photon_energy_relation.
EnergyPartition energy_partition(const ParticleModel& model, int quadrature_points = 64);

/// Integral of the mass density over V_P (same quadrature).
double integrated_mass(const ParticleModel& model, int quadrature_points = 64);

struct PhaseVelocity {
  double c_phase = 0.0;  // omega / |k|
  double c_naive = 0.0;  // u / 2, kinetic-energy-only dispersion
};

PhaseVelocity phase_velocity_check(const ParticleModel& model);

/// max |(-hbar^2/2m) lap psi - (hbar omega / 2) psi| / max |(hbar omega / 2) psi|
/// on the grid, using the compact Laplacian.
double kinetic_operator_check(const ParticleModel& model, const Grid& grid);

/// phi0 / (rho0 c0^2) per mode, with phi0 = p0 k c0^2 / omega.
std::vector<double> photon_energy_relation(const ParticleModel& model);

struct TransferRate {
  double frequency = 0.0;      // nu
  double rate = 0.0;           // h nu^2
  double alpha_fraction = 0.0;
  double alpha_rate = 0.0;     // alpha h nu / tau
  double period = 0.0;         // 1 / nu
};

/// Throws InvalidArgument unless nu > 0 and 0 < alpha <= 1.
TransferRate transfer_rate(const Units& units, double frequency, double alpha_fraction = 1.0);

/// `quantity,value` rows for w_kinetic, w_potential, w_total, omega_implied.
std::size_t write_partition_csv(std::ostream& out, const EnergyPartition& e);

/// `nu,alpha,rate`
std::size_t write_transfer_csv(std::ostream& out, std::span<const TransferRate> rows);

}  // namespace exwave
