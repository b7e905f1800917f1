#pragma once

// Closed-form fields of the extended-particle model.
//
// A particle is a finite box carrying one or more monochromatic plane waves.
// The density oscillates as sin^2 of the phase and the intrinsic potential
// as cos^2, so their weighted sum (rho * u^2 + phi) is constant in space and
// time. All evaluators are pure functions of (model, r, t).

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exwave/units.hpp"
#include "exwave/vec3.hpp"

namespace exwave {

enum class Kind { electron, photon };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

struct WaveMode {
  double amp = 1.0;  // psi0
  Vec3 k_vec;
  double omega = 0.0;
  Vec3 e_prop;
  Vec3 e_trans;
  // Longitudinal momentum amplitude p0. Unset means rho0 * speed.
  std::optional<double> momentum_amp;

  double wavenumber() const { return norm(k_vec); }
  double wavelength() const;
  double frequency() const;
  double period() const { return 1.0 / frequency(); }
  double phase(const Vec3& r, double t) const { return dot(k_vec, r) - omega * t; }
};

/// Builds a mode propagating along e_prop with |k| = wavenumber.
/// Throws InvalidArgument unless e_prop and e_trans are orthonormal and
/// wavenumber, omega are positive.
WaveMode make_mode(double amp, const Vec3& e_prop, const Vec3& e_trans, double wavenumber,
                   double omega);

struct ParticleModel {
  Kind kind = Kind::electron;
  double speed = 0.0;
  double rho0 = 0.0;
  double volume = 0.0;     // V_P
  int box_wavelengths = 1; // whole wavelengths spanned by V_P along e_prop
  std::vector<WaveMode> modes;
  Units units;

  bool is_single_mode() const { return modes.size() == 1; }
  /// Throws UnsupportedSuperposition for wave packets.
  const WaveMode& single_mode() const;

  double mean_density() const { return 0.5 * rho0; }
  double mass() const { return mean_density() * volume; }
  double momentum_amplitude(const WaveMode& mode) const;
  double potential_amplitude() const { return rho0 * speed * speed; }
  double box_length() const;
  double transverse_area() const { return volume / box_length(); }
};

/// Single-mode electron with |k| = m u / hbar and omega = m u^2 / hbar, a box
/// of one wavelength by the unit transverse square, and rho0 = 2 m / V_P so
/// the box holds exactly one electron mass.
ParticleModel canonical_electron(const Units& units, double speed, const Vec3& e_prop = {1, 0, 0},
                                 const Vec3& e_trans = {0, 1, 0});

/// Single-mode photon with omega = c0 |k|.
ParticleModel canonical_photon(const Units& units, double omega, double rho0 = 1.0,
                               const Vec3& e_prop = {1, 0, 0}, const Vec3& e_trans = {0, 1, 0});

/// Copy of the model with every omega multiplied by factor. The result
/// deliberately violates the dispersion invariant when factor != 1.
ParticleModel with_omega_scale(ParticleModel model, double factor);

/// Human-readable list of violated model invariants; empty when canonical.
std::vector<std::string> invariant_violations(const ParticleModel& model, double rel_tol = 1e-12);

double wavefunction(const WaveMode& mode, const Vec3& r, double t);
double wavefunction(const ParticleModel& model, const Vec3& r, double t);
double mass_density(const ParticleModel& model, const Vec3& r, double t);
Vec3 momentum_field(const ParticleModel& model, const Vec3& r, double t);
double intrinsic_potential(const ParticleModel& model, const Vec3& r, double t);

struct EmFields {
  Vec3 E;
  Vec3 B;
};

/// Transversal fields, amplitude v * sqrt(4 pi rho0) with v the particle speed.
EmFields em_fields(const ParticleModel& model, const Vec3& r, double t);

/// A = -c0 p.
Vec3 vector_potential(const ParticleModel& model, const Vec3& r, double t);

// ---------------------------------------------------------------------------
// Field dumps

enum class FieldQuantity { psi, rho, phi, p, A, E, B };

std::string_view to_string(FieldQuantity q);
FieldQuantity parse_field_quantity(std::string_view text);
bool is_vector(FieldQuantity q);

struct FieldSample {
  Vec3 position;
  double time = 0.0;
  std::optional<double> scalar_value;
  std::optional<Vec3> vector_value;
};

FieldSample sample(const ParticleModel& model, FieldQuantity q, const Vec3& r, double t);

/// Samples along e_prop starting at the origin, points_per_wavelength per
/// wavelength over the given number of wavelengths.
std::vector<FieldSample> sample_along_propagation(const ParticleModel& model, FieldQuantity q,
                                                  int points_per_wavelength, int wavelengths,
                                                  double t);

/// Writes `x,y,z,t,value` or `x,y,z,t,vx,vy,vz` depending on the samples.
/// Returns the number of rows written. Mixed scalar/vector input throws.
std::size_t write_field_csv(std::ostream& out, std::span<const FieldSample> samples);

}  // namespace exwave
