#include "exwave/uncertainty.hpp"

#include <numbers>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"

namespace exwave {

UncertaintyReport uncertainty_floor(const ParticleModel& model, std::optional<double> delta_v) {
  if (model.kind != Kind::electron)
    throw WrongKind("uncertainty floor is framed for massive particles");
  const WaveMode& mode = model.single_mode();
  const Units& u = model.units;
  UncertaintyReport r;
  r.speed = model.speed;
  r.k = mode.wavenumber();
  r.wavelength = mode.wavelength();
  r.delta_v = delta_v.value_or(u.m_e * model.speed * model.speed);
  if (r.delta_v < 0.0) throw InvalidArgument("potential spread must be non-negative");
  r.delta_k = u.m_e * r.delta_v / (u.hbar * u.hbar * r.k);
  r.delta_x = 0.5 * r.wavelength;
  r.delta_p = u.hbar * r.delta_k;
  r.product_xp = r.delta_x * r.delta_p;
  r.floor = 0.5 * u.planck_h();
  r.ok = r.product_xp >= r.floor * (1.0 - 1e-12);
  return r;
}

CanonicalFloor canonical_floor(const Units& units) {
  return {0.5 * units.planck_h(), 0.5 * units.hbar, 2.0 * std::numbers::pi};
}

BellResolution bell_resolution_check(const ParticleModel& model) {
  const double half_wave = 0.5 * model.single_mode().wavelength();
  BellResolution b;
  b.required_dx = half_wave;
  b.uncertainty_dx = half_wave;
  // A valid measurement needs dx < required_dx, impossible once the floor
  // already sits at required_dx.
  b.violates = b.required_dx <= b.uncertainty_dx;
  return b;
}

std::size_t write_uncertainty_csv(std::ostream& out, std::span<const UncertaintyReport> rows) {
  CsvWriter csv(out);
  csv.header({"speed", "k", "lambda", "delta_v", "delta_k", "delta_x", "product", "floor", "ok"});
  for (const auto& r : rows) {
    csv.row(r.speed, r.k, r.wavelength, r.delta_v, r.delta_k, r.delta_x, r.product_xp, r.floor,
            r.ok ? "true" : "false");
  }
  return csv.rows();
}

}  // namespace exwave
