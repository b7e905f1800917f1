#pragma once
// Registered numerical checks over the canonical models.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "exwave/fields.hpp"
#include "exwave/units.hpp"

namespace exwave {

enum class Comparison { below, above, at_least };

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::below;
  bool pass = false;
};

struct VerifyConfig {
  Units units;
  double speed = 0.1;  // electron speed in units of c0
  int points_per_wavelength = 64;
  int wavelengths = 1;
  double omega_scale = 1.0;
  std::optional<Kind> kind;  // restricts per-kind checks
  std::map<std::string, double> tolerances;
};

/// Runs every check. Threshold overrides are applied by check name; an
/// override naming no registered check throws InvalidArgument.
std::vector<Check> run_checks(const VerifyConfig& config);

/// `CHECK <name> <value> <threshold> PASS|FAIL`
void print_check(std::ostream& out, const Check& check);

bool all_pass(const std::vector<Check>& checks);

}  // namespace exwave
