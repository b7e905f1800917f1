#include "exwave/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"
#include "exwave/units.hpp"

namespace exwave {

namespace {

constexpr std::array kEquations = {
    EquationId::wave_eq_psi,          EquationId::wave_eq_rho,
    EquationId::wave_eq_p,            EquationId::continuity,
    EquationId::faraday,              EquationId::ampere_modified,
    EquationId::div_B,                EquationId::div_D,
    EquationId::ampere_inhomogeneous, EquationId::lorentz_condition,
    EquationId::vector_potential_evolution, EquationId::schrodinger_free,
};

constexpr double kRoundingFloor = 100.0 * std::numeric_limits<double>::epsilon();

// Scalars ride in the x component so one accumulator handles both kinds.
LatticeFn<Vec3> lift(LatticeFn<double> f) {
  return [f = std::move(f)](const Site& s) { return Vec3{f(s), 0.0, 0.0}; };
}

struct Term {
  LatticeFn<Vec3> value;
};

using Terms = std::vector<Term>;

void add(Terms& terms, LatticeFn<Vec3> f, double factor = 1.0) {
  terms.push_back({scaled(std::move(f), factor)});
}

void add(Terms& terms, LatticeFn<double> f, double factor = 1.0) {
  terms.push_back({scaled(lift(std::move(f)), factor)});
}

void add_all(Terms& terms, const std::vector<LatticeFn<Vec3>>& fs, double factor = 1.0) {
  for (const auto& f : fs) add(terms, f, factor);
}

// Reduces sum(terms) over the spatial lattice at time level zero.
ResidualReport reduce(const Lattice& lattice, const Terms& terms, std::string name) {
  const auto counts = lattice.grid().counts();
  double linf = 0.0, sum_sq = 0.0, scale = 0.0;
  std::size_t count = 0;
  for (int i = 0; i < counts[0]; ++i) {
    for (int j = 0; j < counts[1]; ++j) {
      for (int l = 0; l < counts[2]; ++l) {
        const Site s{i, j, l, 0};
        Vec3 total;
        for (const auto& term : terms) {
          const Vec3 v = term.value(s);
          scale = std::max(scale, norm(v));
          total += v;
        }
        const double r = norm(total);
        linf = std::max(linf, r);
        sum_sq += r * r;
        ++count;
      }
    }
  }
  ResidualReport rep;
  rep.equation = std::move(name);
  rep.points_per_wavelength = lattice.grid().points_per_wavelength;
  rep.residual_linf = linf;
  rep.residual_l2 = std::sqrt(sum_sq / static_cast<double>(count));
  // Every term vanishing identically leaves nothing to normalize against.
  rep.scale = scale > 0.0 ? scale : 1.0;
  rep.normalized_linf = linf / rep.scale;
  return rep;
}

void check_compatible(const ParticleModel& model, const Grid& grid) {
  if (grid.points_per_wavelength < kMinPointsPerWavelength)
    throw InvalidGrid("grid too coarse: need at least 8 points per wavelength");
  const WaveMode& lead = model.modes.at(0);
  if (std::abs(grid.wavelength - lead.wavelength()) > 1e-12 * lead.wavelength() ||
      norm(grid.axes[0] - lead.e_prop) > 1e-12)
    throw InvalidGrid("grid is not aligned with the model's propagation direction");
}

bool uses_transversal(EquationId id, const ParticleModel& model, FieldSource source) {
  if (source != FieldSource::automatic) return source == FieldSource::transversal;
  if (model.kind != Kind::photon) return false;
  return id == EquationId::faraday || id == EquationId::ampere_modified ||
         id == EquationId::div_B || id == EquationId::ampere_inhomogeneous;
}

LatticeEm fields_for(EquationId id, const Lattice& lattice, const ParticleModel& model,
                     FieldSource source) {
  return uses_transversal(id, model, source) ? transversal_fields(lattice, model)
                                             : intrinsic_fields(lattice, model);
}

double mode_wavenumber(const ParticleModel& model) { return model.modes.front().wavenumber(); }

// Amplitude of E or B before any cancellation.
double field_amplitude(EquationId id, const ParticleModel& model, FieldSource source) {
  if (uses_transversal(id, model, source))
    return model.speed * std::sqrt(4.0 * std::numbers::pi * model.rho0);
  const double sbar = sigma_bar(model.units, model.mean_density());
  if (sbar == 0.0) return 0.0;
  return model.rho0 * model.speed * model.modes.front().omega / sbar;
}

}  // namespace

std::string_view to_string(EquationId id) {
  switch (id) {
    case EquationId::wave_eq_psi: return "wave_eq_psi";
    case EquationId::wave_eq_rho: return "wave_eq_rho";
    case EquationId::wave_eq_p: return "wave_eq_p";
    case EquationId::continuity: return "continuity";
    case EquationId::faraday: return "faraday";
    case EquationId::ampere_modified: return "ampere_modified";
    case EquationId::div_B: return "div_B";
    case EquationId::div_D: return "div_D";
    case EquationId::ampere_inhomogeneous: return "ampere_inhomogeneous";
    case EquationId::lorentz_condition: return "lorentz_condition";
    case EquationId::vector_potential_evolution: return "vector_potential_evolution";
    case EquationId::schrodinger_free: return "schrodinger_free";
  }
  return "?";
}

EquationId parse_equation_id(std::string_view text) {
  for (auto id : kEquations) {
    if (to_string(id) == text) return id;
  }
  throw InvalidArgument("unknown equation_id '" + std::string(text) + "'");
}

std::span<const EquationId> all_equations() { return kEquations; }

Vec3 Grid::extent() const {
  const auto n = counts();
  return {n[0] * spacing, n[1] * spacing, n[2] * spacing};
}

Grid build_grid(const ParticleModel& model, int points_per_wavelength, int wavelengths,
                double courant, int transverse_points) {
  if (points_per_wavelength < kMinPointsPerWavelength)
    throw InvalidGrid("points_per_wavelength must be at least 8");
  if (wavelengths < 1) throw InvalidGrid("grid must span at least one wavelength");
  if (!(courant > 0.0)) throw InvalidGrid("courant number must be positive");
  if (transverse_points < 1) throw InvalidGrid("need at least one transverse point");
  if (model.modes.empty()) throw InvalidGrid("model has no modes");
  if (!(model.speed > 0.0)) throw InvalidGrid("model speed must be positive");

  const WaveMode& lead = model.modes.front();
  Grid g;
  g.axes[0] = lead.e_prop;
  g.axes[1] = lead.e_trans;
  g.axes[2] = cross(lead.e_prop, lead.e_trans);
  g.wavelength = lead.wavelength();
  g.points_per_wavelength = points_per_wavelength;
  g.wavelengths = wavelengths;
  g.transverse_points = transverse_points;
  g.spacing = g.wavelength / points_per_wavelength;
  g.courant = courant;
  g.wave_speed = model.speed;
  g.time_step = courant * g.spacing / model.speed;
  return g;
}

Grid refine(const Grid& grid) {
  Grid g = grid;
  g.points_per_wavelength *= 2;
  g.spacing = g.wavelength / g.points_per_wavelength;
  g.time_step = g.courant * g.spacing / g.wave_speed;
  return g;
}

Vec3 Lattice::position(const Site& s) const {
  const auto n = grid_.counts();
  const auto wrap = [](int i, int m) { return ((i % m) + m) % m; };
  const double h = grid_.spacing;
  return grid_.origin + grid_.axes[0] * (wrap(s.i, n[0]) * h) +
         grid_.axes[1] * (wrap(s.j, n[1]) * h) + grid_.axes[2] * (wrap(s.l, n[2]) * h);
}

LatticeFn<double> Lattice::component(LatticeFn<Vec3> v, int axis) const {
  const Vec3 a = grid_.axes[static_cast<std::size_t>(axis)];
  return [v = std::move(v), a](const Site& s) { return dot(v(s), a); };
}

LatticeFn<Vec3> Lattice::grad(LatticeFn<double> f) const {
  auto d0 = d(f, 0), d1 = d(f, 1), d2f = d(f, 2);
  const auto ax = grid_.axes;
  return [d0, d1, d2f, ax](const Site& s) {
    return ax[0] * d0(s) + ax[1] * d1(s) + ax[2] * d2f(s);
  };
}

LatticeFn<double> Lattice::div(LatticeFn<Vec3> v) const {
  auto a = d(component(v, 0), 0), b = d(component(v, 1), 1), c = d(component(v, 2), 2);
  return [a, b, c](const Site& s) { return a(s) + b(s) + c(s); };
}

LatticeFn<Vec3> Lattice::curl(LatticeFn<Vec3> v) const {
  auto c0 = component(v, 0), c1 = component(v, 1), c2 = component(v, 2);
  auto d1c2 = d(c2, 1), d2c1 = d(c1, 2);
  auto d2c0 = d(c0, 2), d0c2 = d(c2, 0);
  auto d0c1 = d(c1, 0), d1c0 = d(c0, 1);
  const auto ax = grid_.axes;
  return [=](const Site& s) {
    return ax[0] * (d1c2(s) - d2c1(s)) + ax[1] * (d2c0(s) - d0c2(s)) +
           ax[2] * (d0c1(s) - d1c0(s));
  };
}

LatticeEm intrinsic_fields(const Lattice& lattice, const ParticleModel& model) {
  const double sbar = sigma_bar(model.units, model.mean_density());
  if (sbar == 0.0) {
    LatticeFn<Vec3> zero = [](const Site&) { return Vec3{}; };
    return {{zero}, {zero}};
  }
  auto phi = lattice.sample<double>(
      [&model](const Vec3& r, double t) { return intrinsic_potential(model, r, t); });
  auto p = lattice.sample<Vec3>(
      [&model](const Vec3& r, double t) { return momentum_field(model, r, t); });
  LatticeEm em;
  em.E.push_back(scaled(lattice.grad(phi), -1.0 / sbar));
  em.E.push_back(scaled(lattice.d(p, kTimeAxis), 1.0 / sbar));
  em.B.push_back(scaled(lattice.curl(p), -1.0 / sbar));
  return em;
}

LatticeEm transversal_fields(const Lattice& lattice, const ParticleModel& model) {
  model.single_mode();
  LatticeEm em;
  em.E.push_back(lattice.sample<Vec3>(
      [&model](const Vec3& r, double t) { return em_fields(model, r, t).E; }));
  em.B.push_back(lattice.sample<Vec3>(
      [&model](const Vec3& r, double t) { return em_fields(model, r, t).B; }));
  return em;
}

ResidualReport residual(EquationId id, const ParticleModel& model, const Grid& grid,
                        FieldSource source) {
  check_compatible(model, grid);
  const Lattice lat(grid);
  const Units& units = model.units;
  const double inv_u2 = 1.0 / (model.speed * model.speed);
  // Transversal E and B share units, so the induction terms carry 1/c0
  // outside natural units. The intrinsic fields need no such factor.
  const double g = uses_transversal(id, model, source) ? 1.0 / units.c0 : 1.0;

  auto psi = lat.sample<double>(
      [&model](const Vec3& r, double t) { return wavefunction(model, r, t); });
  auto rho = lat.sample<double>(
      [&model](const Vec3& r, double t) { return mass_density(model, r, t); });
  auto phi = lat.sample<double>(
      [&model](const Vec3& r, double t) { return intrinsic_potential(model, r, t); });
  auto p = lat.sample<Vec3>(
      [&model](const Vec3& r, double t) { return momentum_field(model, r, t); });

  // Map a derivative over every constituent of a split field.
  const auto each = [](const std::vector<LatticeFn<Vec3>>& fs, auto op) {
    std::vector<LatticeFn<Vec3>> out;
    for (const auto& f : fs) out.push_back(op(f));
    return out;
  };
  const auto each_scalar = [](const std::vector<LatticeFn<Vec3>>& fs, auto op) {
    std::vector<LatticeFn<double>> out;
    for (const auto& f : fs) out.push_back(op(f));
    return out;
  };

  Terms terms;
  switch (id) {
    case EquationId::wave_eq_psi:
      add(terms, lat.laplacian(psi));
      add(terms, lat.d2(psi, kTimeAxis), -inv_u2);
      break;
    case EquationId::wave_eq_rho:
      model.single_mode();
      add(terms, lat.laplacian(rho));
      add(terms, lat.d2(rho, kTimeAxis), -inv_u2);
      break;
    case EquationId::wave_eq_p:
      add(terms, lat.laplacian(p));
      add(terms, lat.d2(p, kTimeAxis), -inv_u2);
      break;
    case EquationId::continuity:
      model.single_mode();
      add(terms, lat.div(p));
      add(terms, lat.d(rho, kTimeAxis));
      break;
    case EquationId::faraday: {
      // curl E + g dB/dt = 0
      const LatticeEm em = fields_for(id, lat, model, source);
      add_all(terms, each(em.E, [&](const auto& f) { return lat.curl(f); }));
      add_all(terms, each(em.B, [&](const auto& f) { return lat.d(f, kTimeAxis); }), g);
      break;
    }
    case EquationId::ampere_modified: {
      // (1/(g u^2)) dE/dt - curl B = 0
      const LatticeEm em = fields_for(id, lat, model, source);
      add_all(terms, each(em.E, [&](const auto& f) { return lat.d(f, kTimeAxis); }),
              inv_u2 / g);
      add_all(terms, each(em.B, [&](const auto& f) { return lat.curl(f); }), -1.0);
      break;
    }
    case EquationId::div_B: {
      const LatticeEm em = fields_for(id, lat, model, source);
      for (auto& f : each_scalar(em.B, [&](const auto& b) { return lat.div(b); }))
        add(terms, std::move(f));
      break;
    }
    case EquationId::div_D: {
      // div(eps E) = sigma. The free particle's field carries no external
      // source, so sigma = 0 here.
      const LatticeEm em = fields_for(id, lat, model, source);
      for (auto& f : each_scalar(em.E, [&](const auto& e) { return lat.div(e); }))
        add(terms, std::move(f), units.eps_medium);
      break;
    }
    case EquationId::ampere_inhomogeneous: {
      // J + g dD/dt - curl H = 0 with D = eps E, H = B / mu and J = 0
      // (no free charge, zero integration constant).
      const LatticeEm em = fields_for(id, lat, model, source);
      add_all(terms, each(em.E, [&](const auto& f) { return lat.d(f, kTimeAxis); }),
              units.eps_medium * g);
      add_all(terms, each(em.B, [&](const auto& f) { return lat.curl(f); }),
              -1.0 / units.mu_medium);
      break;
    }
    case EquationId::lorentz_condition:
      // (1/u^2) dphi/dt - div p = 0
      add(terms, lat.d(phi, kTimeAxis), inv_u2);
      add(terms, lat.div(p), -1.0);
      break;
    case EquationId::vector_potential_evolution: {
      // (1/c0) dA/dt + grad phi + E = 0 with A = -c0 p
      auto a = lat.sample<Vec3>(
          [&model](const Vec3& r, double t) { return vector_potential(model, r, t); });
      add(terms, lat.d(a, kTimeAxis), 1.0 / units.c0);
      add(terms, lat.grad(phi));
      const auto src = source == FieldSource::automatic ? FieldSource::intrinsic : source;
      add_all(terms, fields_for(id, lat, model, src).E);
      break;
    }
    case EquationId::schrodinger_free: {
      // (-hbar^2/2m) lap psi + V psi = W_T psi with V the intrinsic potential
      // energy of the box and W_T = hbar omega.
      if (model.kind != Kind::electron)
        throw WrongKind("the free Schroedinger balance needs a massive particle");
      const WaveMode& mode = model.single_mode();
      const double mean_phi = 0.5 * model.potential_amplitude();
      const double v_intrinsic = 0.5 * mean_phi * model.volume;
      const double w_total = units.hbar * mode.omega;
      add(terms, lat.laplacian(psi), -units.hbar * units.hbar / (2.0 * units.m_e));
      add(terms, psi, v_intrinsic);
      add(terms, psi, -w_total);
      break;
    }
  }
  ResidualReport rep = reduce(lat, terms, std::string(to_string(id)));
  if (id == EquationId::div_B || id == EquationId::div_D) {
    // A divergence has a single constituent per field, so its own magnitude
    // cannot serve as the scale when the field is rounding noise. Use the
    // wavenumber times the field amplitude instead when that is larger.
    const double floor = mode_wavenumber(model) * field_amplitude(id, model, source);
    if (floor > rep.scale) {
      rep.scale = floor;
      rep.normalized_linf = rep.residual_linf / floor;
    }
  }
  return rep;
}

ResidualReport longitudinal_vanishing(const ParticleModel& model, const Grid& grid) {
  check_compatible(model, grid);
  const WaveMode& mode = model.single_mode();
  const Lattice lat(grid);
  ResidualReport rep;
  rep.equation = "longitudinal_vanishing";
  rep.points_per_wavelength = grid.points_per_wavelength;
  const double sbar = sigma_bar(model.units, model.mean_density());
  if (sbar == 0.0) {
    rep.scale = 1.0;
    return rep;
  }
  const LatticeEm em = intrinsic_fields(lat, model);
  const auto counts = grid.counts();
  double linf = 0.0, sum_sq = 0.0;
  std::size_t count = 0;
  for (int i = 0; i < counts[0]; ++i) {
    for (int j = 0; j < counts[1]; ++j) {
      for (int l = 0; l < counts[2]; ++l) {
        const Site s{i, j, l, 0};
        Vec3 e, b;
        for (const auto& f : em.E) e += f(s);
        for (const auto& f : em.B) b += f(s);
        const double m = std::max(norm(e), norm(b));
        linf = std::max(linf, m);
        sum_sq += m * m;
        ++count;
      }
    }
  }
  rep.residual_linf = linf;
  rep.residual_l2 = std::sqrt(sum_sq / static_cast<double>(count));
  rep.scale = model.rho0 * model.speed * mode.omega / sbar;
  rep.normalized_linf = linf / rep.scale;
  return rep;
}

double convergence_order(EquationId id, const ParticleModel& model, const Grid& base,
                         FieldSource source) {
  const ResidualReport coarse = residual(id, model, base, source);
  if (coarse.normalized_linf <= kRoundingFloor)
    throw OrderUndefined(std::string(to_string(id)) +
                         ": residual is at rounding level, no order to estimate");
  const ResidualReport fine = residual(id, model, refine(base), source);
  if (fine.normalized_linf <= 0.0)
    throw OrderUndefined(std::string(to_string(id)) + ": refined residual vanished");
  return std::log2(coarse.normalized_linf / fine.normalized_linf);
}

ResidualReport residual_with_order(EquationId id, const ParticleModel& model, const Grid& grid,
                                   FieldSource source) {
  ResidualReport rep = residual(id, model, grid, source);
  if (rep.normalized_linf > kRoundingFloor) {
    const ResidualReport fine = residual(id, model, refine(grid), source);
    if (fine.normalized_linf > 0.0)
      rep.estimated_order = std::log2(rep.normalized_linf / fine.normalized_linf);
  }
  return rep;
}

std::size_t write_report_csv(std::ostream& out, std::span<const ResidualReport> reports) {
  CsvWriter csv(out);
  csv.header({"equation_id", "N", "residual_linf", "residual_l2", "scale", "normalized_linf",
              "estimated_order"});
  for (const auto& r : reports) {
    csv.row(r.equation, r.points_per_wavelength, r.residual_linf, r.residual_l2, r.scale,
            r.normalized_linf,
            r.estimated_order ? format_double(*r.estimated_order) : std::string());
  }
  return csv.rows();
}

}  // namespace exwave
