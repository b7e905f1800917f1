#pragma once

#include <optional>
#include <ostream>
#include <span>

#include "exwave/fields.hpp"
#include "exwave/units.hpp"

namespace exwave {

struct UncertaintyReport {
  double speed = 0.0;
  double k = 0.0;
  double wavelength = 0.0;
  double delta_v = 0.0;  // potential spread, at least phi0 = m u^2
  double delta_k = 0.0;  // m dV / (hbar^2 k)
  double delta_x = 0.0;  // lambda / 2
  double delta_p = 0.0;  // hbar dk
  double product_xp = 0.0;
  double floor = 0.0;    // h / 2
  bool ok = false;       // product_xp >= floor
};

/// Position-momentum spread of a single-mode electron. delta_v defaults to
/// its minimum m u^2; larger values widen the momentum spread linearly.
/// Photons throw WrongKind.
UncertaintyReport uncertainty_floor(const ParticleModel& model,
                                    std::optional<double> delta_v = std::nullopt);

struct CanonicalFloor {
  double h_half = 0.0;
  double hbar_half = 0.0;
  double ratio = 0.0;  // 2 pi
};

CanonicalFloor canonical_floor(const Units& units);

struct BellResolution {
  double required_dx = 0.0;     // resolution needed to follow the spin oscillation
  double uncertainty_dx = 0.0;  // position floor of the uncertainty product
  bool violates = false;
};

/// A spin-correlation measurement must resolve better than half a
/// wavelength, which is exactly the position floor; the requirement is strict,
/// so it always conflicts with the floor.
BellResolution bell_resolution_check(const ParticleModel& model);

std::size_t write_uncertainty_csv(std::ostream& out, std::span<const UncertaintyReport> rows);

}  // namespace exwave
