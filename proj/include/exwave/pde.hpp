#pragma once

// Finite-difference residuals of the model's field equations.
//
// Fields are evaluated in closed form on a periodic lattice aligned with the
// propagation direction. All first derivatives (grad, div, curl, d/dt) share
// one two-point central stencil, so discrete operators commute exactly and
// curl(grad f) vanishes to rounding. Second derivatives in wave operators use
// the compact three-point stencil in both space and time.

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exwave/fields.hpp"
#include "exwave/vec3.hpp"

namespace exwave {

enum class EquationId {
  wave_eq_psi,
  wave_eq_rho,
  wave_eq_p,
  continuity,
  faraday,
  ampere_modified,
  div_B,
  div_D,
  ampere_inhomogeneous,
  lorentz_condition,
  vector_potential_evolution,
  schrodinger_free,
};

std::string_view to_string(EquationId id);
EquationId parse_equation_id(std::string_view text);
std::span<const EquationId> all_equations();

/// Which E, B enter the electromagnetic equations.
///   transversal: the closed-form radiative fields of em_fields().
///   intrinsic:   sigma_bar E = -grad phi + dp/dt, sigma_bar B = -curl p,
///                assembled with the lattice stencils.
///   automatic:   transversal for photons in faraday / ampere_modified /
///                div_B / ampere_inhomogeneous, intrinsic otherwise.
enum class FieldSource { automatic, transversal, intrinsic };

struct Grid {
  Vec3 origin;
  std::array<Vec3, 3> axes;  // right-handed, axes[0] = e_prop
  double wavelength = 0.0;
  int points_per_wavelength = 0;
  int wavelengths = 0;
  int transverse_points = 0;
  double spacing = 0.0;    // h = wavelength / points_per_wavelength
  double courant = 0.0;    // wave_speed * dt / h
  double wave_speed = 0.0;
  double time_step = 0.0;

  std::array<int, 3> counts() const {
    return {points_per_wavelength * wavelengths, transverse_points, transverse_points};
  }
  Vec3 extent() const;
};

inline constexpr double kDefaultCourant = 0.95;
inline constexpr int kDefaultTransversePoints = 4;
inline constexpr int kMinPointsPerWavelength = 8;

/// Throws InvalidGrid when points_per_wavelength < 8 or wavelengths < 1.
Grid build_grid(const ParticleModel& model, int points_per_wavelength, int wavelengths = 1,
                double courant = kDefaultCourant,
                int transverse_points = kDefaultTransversePoints);

/// Same domain at twice the resolution.
Grid refine(const Grid& grid);

struct ResidualReport {
  std::string equation;
  int points_per_wavelength = 0;
  double residual_linf = 0.0;
  double residual_l2 = 0.0;
  double scale = 0.0;
  double normalized_linf = 0.0;
  std::optional<double> estimated_order;
};

ResidualReport residual(EquationId id, const ParticleModel& model, const Grid& grid,
                        FieldSource source = FieldSource::automatic);

/// Intrinsic E and B of a single longitudinal mode, normalized by
/// rho0 * speed * omega / sigma_bar. Both E and B vanish to truncation when
/// the dispersion relation holds.
ResidualReport longitudinal_vanishing(const ParticleModel& model, const Grid& grid);

/// log2(r(N) / r(2N)) of the normalized residual. Throws OrderUndefined when
/// the base residual is at rounding level (below 100 machine epsilons).
double convergence_order(EquationId id, const ParticleModel& model, const Grid& base,
                         FieldSource source = FieldSource::automatic);

/// Residual at the grid plus its convergence order against the refined grid,
/// when one is defined.
ResidualReport residual_with_order(EquationId id, const ParticleModel& model, const Grid& grid,
                                   FieldSource source = FieldSource::automatic);

std::size_t write_report_csv(std::ostream& out, std::span<const ResidualReport> reports);

// ---------------------------------------------------------------------------
// Lattice operators

struct Site {
  int i = 0;  // along axes[0]
  int j = 0;  // along axes[1]
  int l = 0;  // along axes[2]
  int n = 0;  // time level
};

inline constexpr int kTimeAxis = 3;

template <typename T>
using LatticeFn = std::function<T(const Site&)>;

class Lattice {
 public:
  explicit Lattice(Grid grid) : grid_(std::move(grid)) {}

  const Grid& grid() const { return grid_; }

  /// Position with periodic wraparound of the spatial indices.
  Vec3 position(const Site& s) const;
  double time(const Site& s) const { return s.n * grid_.time_step; }

  template <typename T, typename F>
  LatticeFn<T> sample(F f) const {
    return [this, f](const Site& s) -> T { return f(position(s), time(s)); };
  }

  /// Central first difference along a lattice axis (0..2) or time (3).
  template <typename T>
  LatticeFn<T> d(LatticeFn<T> f, int axis) const {
    const double inv = 1.0 / (2.0 * step(axis));
    return [f = std::move(f), axis, inv](const Site& s) -> T {
      return (f(shifted(s, axis, +1)) - f(shifted(s, axis, -1))) * inv;
    };
  }

  /// Compact second difference along a lattice axis or time.
  template <typename T>
  LatticeFn<T> d2(LatticeFn<T> f, int axis) const {
    const double inv = 1.0 / (step(axis) * step(axis));
    return [f = std::move(f), axis, inv](const Site& s) -> T {
      return (f(shifted(s, axis, +1)) - f(s) * 2.0 + f(shifted(s, axis, -1))) * inv;
    };
  }

  template <typename T>
  LatticeFn<T> laplacian(LatticeFn<T> f) const {
    auto a = d2(f, 0), b = d2(f, 1), c = d2(f, 2);
    return [a, b, c](const Site& s) -> T { return a(s) + b(s) + c(s); };
  }

  LatticeFn<Vec3> grad(LatticeFn<double> f) const;
  LatticeFn<double> div(LatticeFn<Vec3> v) const;
  LatticeFn<Vec3> curl(LatticeFn<Vec3> v) const;

 private:
  double step(int axis) const { return axis == kTimeAxis ? grid_.time_step : grid_.spacing; }
  static Site shifted(Site s, int axis, int by) {
    switch (axis) {
      case 0: s.i += by; break;
      case 1: s.j += by; break;
      case 2: s.l += by; break;
      default: s.n += by; break;
    }
    return s;
  }
  LatticeFn<double> component(LatticeFn<Vec3> v, int axis) const;

  Grid grid_;
};

template <typename T>
LatticeFn<T> scaled(LatticeFn<T> f, double factor) {
  return [f = std::move(f), factor](const Site& s) -> T { return f(s) * factor; };
}

/// Electromagnetic field split into additive constituents, so residual
/// normalization can see the magnitude of each cancelling piece.
struct LatticeEm {
  std::vector<LatticeFn<Vec3>> E;
  std::vector<LatticeFn<Vec3>> B;
};

/// sigma_bar E = -grad phi + dp/dt, sigma_bar B = -curl p. Zero fields when
/// the model carries no mass (sigma_bar = 0).
LatticeEm intrinsic_fields(const Lattice& lattice, const ParticleModel& model);
LatticeEm transversal_fields(const Lattice& lattice, const ParticleModel& model);

}  // namespace exwave
