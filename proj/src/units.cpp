#include "exwave/units.hpp"

#include "exwave/errors.hpp"

namespace exwave {

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::natural ? "natural" : "si";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "natural") return Scheme::natural;
  if (text == "si") return Scheme::si;
  throw InvalidArgument("unknown unit scheme '" + std::string(text) + "'");
}

Units make_units(Scheme scheme) {
  Units u;
  u.scheme = scheme;
  if (scheme == Scheme::si) {
    u.hbar = 1.054571817e-34;     // J s
    u.c0 = 299792458.0;           // m / s
    u.m_e = 9.1093837015e-31;     // kg
    u.e_charge = 1.602176634e-19; // C
  }
  return u;
}

Units with_overrides(Units units, const std::map<std::string, double>& overrides) {
  for (const auto& [key, value] : overrides) {
    if (!(value > 0.0)) throw InvalidArgument("constant '" + key + "' must be positive");
    if (key == "hbar") {
      units.hbar = value;
    } else if (key == "c0") {
      units.c0 = value;
    } else if (key == "m_e") {
      units.m_e = value;
    } else if (key == "e_charge") {
      units.e_charge = value;
    } else if (key == "C_density") {
      units.C_density = value;
    } else if (key == "mu_medium") {
      units.mu_medium = value;
    } else if (key == "eps_medium") {
      units.eps_medium = value;
    } else if (key == "transverse_length") {
      units.transverse_length = value;
    } else {
      throw InvalidArgument("unknown units key '" + key + "'");
    }
  }
  return units;
}

double sigma_bar(const Units& units, double rho_bar) {
  if (rho_bar < 0.0) throw InvalidArgument("mean mass density must be non-negative");
  return units.e_charge / units.m_e * rho_bar;
}

bool is_valid(const Units& u) {
  return u.hbar > 0 && u.c0 > 0 && u.m_e > 0 && u.e_charge > 0 && u.C_density > 0 &&
         u.mu_medium > 0 && u.eps_medium > 0 && u.transverse_length > 0;
}

}  // namespace exwave
