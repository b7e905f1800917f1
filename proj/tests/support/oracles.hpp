#pragma once
// Test-side reference values computed without the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// CODATA 2018, transcribed by hand.
inline constexpr double kHbarSI = 1.054571817e-34;
inline constexpr double kPlanckSI = 6.62607015e-34;
inline constexpr double kLightSI = 299792458.0;
inline constexpr double kElectronMassSI = 9.1093837015e-31;
inline constexpr double kElementaryChargeSI = 1.602176634e-19;
// Published reduced value 2.42631023867e-12 m.
inline constexpr double kComptonSI = 2.42631023867e-12;

inline double rel(double value, double target) {
  return std::abs(value - target) / std::abs(target);
}

// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Symbol of the three-point second difference acting on exp(i k x):
// -(2 - 2 cos(k h)) / h^2 replaces -k^2.
inline double second_difference_symbol(double k, double h) {
  return (2.0 - 2.0 * std::cos(k * h)) / (h * h);
}

// Symbol of the two-point central first difference: sin(k h) / h replaces k.
inline double first_difference_symbol(double k, double h) { return std::sin(k * h) / h; }

inline double lorentz_gamma(double beta) { return 1.0 / std::sqrt(1.0 - beta * beta); }

}  // namespace oracle
