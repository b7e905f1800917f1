#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "exwave/units.hpp"

namespace exwave {

/// u = sqrt(hbar omega / m). Throws RelativisticRecoil when hbar omega / m
/// reaches c0^2 and InvalidArgument for omega < 0.
double recoil_velocity(const Units& units, double omega_photon);

struct DopplerShift {
  double exact = 0.0;        // nu sqrt((1 - u/c) / (1 + u/c))
  double first_order = 0.0;  // nu (1 - u/c)
};

/// Frequency seen from a source receding at u. Throws SuperluminalBoost for |u| >= c0.
DopplerShift doppler_shift(const Units& units, double nu, double u);

/// h / (m c0).
double compton_wavelength(const Units& units);

/// lambda_C (1 - cos theta).
double delta_lambda(const Units& units, double theta);

struct ComptonRow {
  double theta = 0.0;
  double delta_lambda = 0.0;
  // NaN unless an incident wavelength is given.
  double lambda_out = 0.0;
  double nu_out = 0.0;
  double u_recoil = 0.0;  // u0 cos theta
};

/// The recoil speed u0 comes from absorbing the incident photon, so it
/// needs lambda_in and throws RelativisticRecoil for lambda_in <= lambda_C.
ComptonRow angular_shift(const Units& units, double theta,
                         std::optional<double> lambda_in = std::nullopt);

/// Rows at theta = start + (end - start) i / (steps - 1).
std::vector<ComptonRow> angular_sweep(const Units& units, double theta_start, double theta_end,
                                      int steps, std::optional<double> lambda_in = std::nullopt);

/// h nu^2 / V.
double emission_rate_density(const Units& units, double nu, double volume);

std::size_t write_compton_csv(std::ostream& out, std::span<const ComptonRow> rows);

/// Standalone SVG line chart of delta_lambda / lambda_C against theta in degrees.
void write_compton_svg(std::ostream& out, std::span<const ComptonRow> rows,
                       double lambda_compton);

}  // namespace exwave
