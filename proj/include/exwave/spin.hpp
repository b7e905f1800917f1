#pragma once

#include <ostream>
#include <span>

#include "exwave/fields.hpp"
#include "exwave/units.hpp"
#include "exwave/vec3.hpp"

namespace exwave {

/// Magnetic field of the rotation picture, |B| = factor (rho_bar/sigma_bar) omega
/// with factor 2 for photons and 1 for electrons (the halved external-field
/// definition). rho_bar/sigma_bar = m/e.
double rotation_b_field(Kind kind, const ParticleModel& model);

/// mu = g e s / (2 m c0). Throws InvalidArgument for s < 0.
double magnetic_moment(const Units& units, double g, double s);

struct SpinSolution {
  Kind kind = Kind::electron;
  double omega = 0.0;
  double g_factor = 0.0;
  double spin = 0.0;
  double product_gs = 0.0;
  double b_rotation = 0.0;
  double w_qt = 0.0;  // hbar omega (photon) or hbar omega / 2 (electron)
  double w_ed = 0.0;  // mu B c0 with the solved g, s
  bool energy_match = false;
  Vec3 spin_axis;     // along the intrinsic magnetic field
  bool axis_parallel = false;
};

/// Solves W_qt = g s omega (photon) or g s omega / 2 (electron) for g s,
/// then fixes g = 1 for photons and s = hbar / 2 for electrons.
SpinSolution solve_spin(Kind kind, const ParticleModel& model);

std::size_t write_spin_csv(std::ostream& out, std::span<const SpinSolution> rows);

}  // namespace exwave
