#pragma once

#include <map>
#include <numbers>
#include <string>
#include <string_view>

namespace exwave {

enum class Scheme { natural, si };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view text);

/// Unit conventions and constants shared by every module.
///
/// In the natural scheme every constant is one. The SI scheme carries
/// CODATA 2018 values; mu_medium and eps_medium stay dimensionless
/// relative factors (vacuum = 1) in both schemes.
struct Units {
  double hbar = 1.0;
  double c0 = 1.0;
  double m_e = 1.0;
  double e_charge = 1.0;
  double C_density = 1.0;  // rho0 = C * psi0^2
  double mu_medium = 1.0;
  double eps_medium = 1.0;
  // Transverse edge of the default particle box, in the scheme's length unit.
  double transverse_length = 1.0;
  Scheme scheme = Scheme::natural;

  double planck_h() const { return 2.0 * std::numbers::pi * hbar; }
  double charge_per_mass() const { return e_charge / m_e; }

  friend bool operator==(const Units&, const Units&) = default;
};

Units make_units(Scheme scheme);

/// Overrides constants by key (hbar, c0, m_e, e_charge, C_density,
/// mu_medium, eps_medium). Unknown keys and non-positive values throw.
Units with_overrides(Units units, const std::map<std::string, double>& overrides);

/// Charge density bridge sigma_bar = (e/m) * rho_bar.
double sigma_bar(const Units& units, double rho_bar);

/// Returns true when every constant is strictly positive.
bool is_valid(const Units& units);

}  // namespace exwave
