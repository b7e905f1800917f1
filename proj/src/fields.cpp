#include "exwave/fields.hpp"

#include <cmath>
#include <numbers>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"

namespace exwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::electron ? "electron" : "photon"; }

Kind parse_kind(std::string_view text) {
  if (text == "electron") return Kind::electron;
  if (text == "photon") return Kind::photon;
  throw InvalidArgument("unknown particle kind '" + std::string(text) + "'");
}

double WaveMode::wavelength() const { return kTwoPi / wavenumber(); }
double WaveMode::frequency() const { return omega / kTwoPi; }

WaveMode make_mode(double amp, const Vec3& e_prop, const Vec3& e_trans, double wavenumber,
                   double omega) {
  constexpr double tol = 1e-12;
  if (std::abs(norm(e_prop) - 1.0) > tol || std::abs(norm(e_trans) - 1.0) > tol)
    throw InvalidArgument("polarization vectors must be unit length");
  if (std::abs(dot(e_prop, e_trans)) > tol)
    throw InvalidArgument("propagation and transversal vectors must be orthogonal");
  if (!(wavenumber > 0.0) || !(omega > 0.0))
    throw InvalidArgument("wavenumber and omega must be positive");
  return WaveMode{amp, e_prop * wavenumber, omega, e_prop, e_trans, std::nullopt};
}

const WaveMode& ParticleModel::single_mode() const {
  if (modes.size() != 1)
    throw UnsupportedSuperposition("operation is defined per plane-wave component; got " +
                                   std::to_string(modes.size()) + " modes");
  return modes.front();
}

double ParticleModel::momentum_amplitude(const WaveMode& mode) const {
  return mode.momentum_amp.value_or(rho0 * speed);
}

double ParticleModel::box_length() const {
  return box_wavelengths * modes.front().wavelength();
}

ParticleModel canonical_electron(const Units& units, double speed, const Vec3& e_prop,
                                 const Vec3& e_trans) {
  if (!(speed > 0.0) || !(speed < units.c0))
    throw InvalidArgument("electron speed must lie in (0, c0)");
  const double k = units.m_e * speed / units.hbar;
  const double omega = units.m_e * speed * speed / units.hbar;
  ParticleModel m;
  m.kind = Kind::electron;
  m.speed = speed;
  m.units = units;
  const double lambda = kTwoPi / k;
  m.volume = lambda * units.transverse_length * units.transverse_length;
  m.rho0 = 2.0 * units.m_e / m.volume;
  m.modes.push_back(make_mode(std::sqrt(m.rho0 / units.C_density), e_prop, e_trans, k, omega));
  return m;
}

ParticleModel canonical_photon(const Units& units, double omega, double rho0, const Vec3& e_prop,
                               const Vec3& e_trans) {
  if (!(omega > 0.0)) throw InvalidArgument("photon omega must be positive");
  if (rho0 < 0.0) throw InvalidArgument("density amplitude must be non-negative");
  const double k = omega / units.c0;
  ParticleModel m;
  m.kind = Kind::photon;
  m.speed = units.c0;
  m.units = units;
  m.rho0 = rho0;
  m.volume = kTwoPi / k * units.transverse_length * units.transverse_length;
  m.modes.push_back(make_mode(std::sqrt(rho0 / units.C_density), e_prop, e_trans, k, omega));
  return m;
}

ParticleModel with_omega_scale(ParticleModel model, double factor) {
  for (auto& mode : model.modes) mode.omega *= factor;
  return model;
}

std::vector<std::string> invariant_violations(const ParticleModel& m, double rel_tol) {
  std::vector<std::string> out;
  const Units& u = m.units;
  if (!is_valid(u)) out.emplace_back("units constants must be positive");
  if (m.modes.empty()) out.emplace_back("model has no modes");
  if (!(m.volume > 0.0)) out.emplace_back("volume must be positive");
  if (m.box_wavelengths < 1) out.emplace_back("volume must span whole wavelengths");
  if (m.rho0 < 0.0) out.emplace_back("density amplitude must be non-negative");
  if (m.kind == Kind::electron && !(m.speed > 0.0 && m.speed < u.c0))
    out.emplace_back("electron speed must lie in (0, c0)");
  if (m.kind == Kind::photon && !close_rel(m.speed, u.c0, rel_tol))
    out.emplace_back("photon speed must equal c0");
  for (std::size_t i = 0; i < m.modes.size(); ++i) {
    const WaveMode& w = m.modes[i];
    const std::string tag = "mode " + std::to_string(i) + ": ";
    if (std::abs(norm(w.e_prop) - 1.0) > rel_tol || std::abs(norm(w.e_trans) - 1.0) > rel_tol ||
        std::abs(dot(w.e_prop, w.e_trans)) > rel_tol)
      out.push_back(tag + "polarization vectors not orthonormal");
    if (!(w.omega > 0.0) || !(w.wavenumber() > 0.0))
      out.push_back(tag + "omega and |k| must be positive");
    if (norm(cross(w.k_vec, w.e_prop)) > rel_tol * w.wavenumber() || dot(w.k_vec, w.e_prop) <= 0.0)
      out.push_back(tag + "k not along e_prop");
    if (!close_rel(w.omega, m.speed * w.wavenumber(), rel_tol))
      out.push_back(tag + "dispersion omega = speed |k| violated");
  }
  if (m.kind == Kind::electron && m.modes.size() == 1) {
    const WaveMode& w = m.modes.front();
    if (!close_rel(w.wavenumber(), u.m_e * m.speed / u.hbar, rel_tol))
      out.emplace_back("de Broglie wavenumber |k| = m u / hbar violated");
    if (!close_rel(w.omega, u.m_e * m.speed * m.speed / u.hbar, rel_tol))
      out.emplace_back("energy relation hbar omega = m u^2 violated");
  }
  return out;
}

double wavefunction(const WaveMode& mode, const Vec3& r, double t) {
  return mode.amp * std::sin(mode.phase(r, t));
}

double wavefunction(const ParticleModel& model, const Vec3& r, double t) {
  double sum = 0.0;
  for (const auto& mode : model.modes) sum += wavefunction(mode, r, t);
  return sum;
}

double mass_density(const ParticleModel& model, const Vec3& r, double t) {
  const double s = std::sin(model.single_mode().phase(r, t));
  return model.rho0 * s * s;
}

Vec3 momentum_field(const ParticleModel& model, const Vec3& r, double t) {
  Vec3 p;
  for (const auto& mode : model.modes) {
    const double s = std::sin(mode.phase(r, t));
    p += mode.e_prop * (model.momentum_amplitude(mode) * s * s);
  }
  return p;
}

double intrinsic_potential(const ParticleModel& model, const Vec3& r, double t) {
  const double phi0 = model.potential_amplitude();
  double phi = 0.0;
  for (const auto& mode : model.modes) {
    const double c = std::cos(mode.phase(r, t));
    phi += phi0 * c * c;
  }
  return phi;
}

EmFields em_fields(const ParticleModel& model, const Vec3& r, double t) {
  const WaveMode& mode = model.single_mode();
  const double amplitude =
      model.speed * std::sqrt(4.0 * std::numbers::pi * model.rho0) * std::cos(mode.phase(r, t));
  return {mode.e_trans * amplitude, cross(mode.e_prop, mode.e_trans) * amplitude};
}

Vec3 vector_potential(const ParticleModel& model, const Vec3& r, double t) {
  return momentum_field(model, r, t) * (-model.units.c0);
}

std::string_view to_string(FieldQuantity q) {
  switch (q) {
    case FieldQuantity::psi: return "psi";
    case FieldQuantity::rho: return "rho";
    case FieldQuantity::phi: return "phi";
    case FieldQuantity::p: return "p";
    case FieldQuantity::A: return "A";
    case FieldQuantity::E: return "E";
    case FieldQuantity::B: return "B";
  }
  return "?";
}

FieldQuantity parse_field_quantity(std::string_view text) {
  for (auto q : {FieldQuantity::psi, FieldQuantity::rho, FieldQuantity::phi, FieldQuantity::p,
                 FieldQuantity::A, FieldQuantity::E, FieldQuantity::B}) {
    if (to_string(q) == text) return q;
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "'");
}

bool is_vector(FieldQuantity q) {
  return q == FieldQuantity::p || q == FieldQuantity::A || q == FieldQuantity::E ||
         q == FieldQuantity::B;
}

FieldSample sample(const ParticleModel& model, FieldQuantity q, const Vec3& r, double t) {
  FieldSample s{r, t, std::nullopt, std::nullopt};
  switch (q) {
    case FieldQuantity::psi: s.scalar_value = wavefunction(model, r, t); break;
    case FieldQuantity::rho: s.scalar_value = mass_density(model, r, t); break;
    case FieldQuantity::phi: s.scalar_value = intrinsic_potential(model, r, t); break;
    case FieldQuantity::p: s.vector_value = momentum_field(model, r, t); break;
    case FieldQuantity::A: s.vector_value = vector_potential(model, r, t); break;
    case FieldQuantity::E: s.vector_value = em_fields(model, r, t).E; break;
    case FieldQuantity::B: s.vector_value = em_fields(model, r, t).B; break;
  }
  return s;
}

std::vector<FieldSample> sample_along_propagation(const ParticleModel& model, FieldQuantity q,
                                                  int points_per_wavelength, int wavelengths,
                                                  double t) {
  if (points_per_wavelength < 1 || wavelengths < 1)
    throw InvalidArgument("sampling needs at least one point and one wavelength");
  const WaveMode& lead = model.modes.front();
  const double h = lead.wavelength() / points_per_wavelength;
  const int count = points_per_wavelength * wavelengths;
  std::vector<FieldSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sample(model, q, lead.e_prop * (i * h), t));
  return out;
}

std::size_t write_field_csv(std::ostream& out, std::span<const FieldSample> samples) {
  const bool vector = !samples.empty() && samples.front().vector_value.has_value();
  CsvWriter csv(out);
  if (vector) {
    csv.header({"x", "y", "z", "t", "vx", "vy", "vz"});
  } else {
    csv.header({"x", "y", "z", "t", "value"});
  }
  for (const auto& s : samples) {
    if (s.scalar_value.has_value() == s.vector_value.has_value() ||
        s.vector_value.has_value() != vector)
      throw InvalidArgument("field samples must all be scalar or all be vector");
    const Vec3& r = s.position;
    if (vector) {
      const Vec3& v = *s.vector_value;
      csv.row(r.x, r.y, r.z, s.time, v.x, v.y, v.z);
    } else {
      csv.row(r.x, r.y, r.z, s.time, *s.scalar_value);
    }
  }
  return csv.rows();
}

}  // namespace exwave
