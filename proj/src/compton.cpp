#include "exwave/compton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"

namespace exwave {

double recoil_velocity(const Units& units, double omega_photon) {
  if (omega_photon < 0.0) throw InvalidArgument("photon omega must be non-negative");
  const double u2 = units.hbar * omega_photon / units.m_e;
  if (u2 >= units.c0 * units.c0)
    throw RelativisticRecoil("recoil energy reaches m c0^2; the non-relativistic recoil does not apply");
  return std::sqrt(u2);
}

DopplerShift doppler_shift(const Units& units, double nu, double u) {
  if (!(std::abs(u) < units.c0)) throw SuperluminalBoost("source speed must be below c0");
  const double beta = u / units.c0;
  return {nu * std::sqrt((1.0 - beta) / (1.0 + beta)), nu * (1.0 - beta)};
}

double compton_wavelength(const Units& units) {
  return units.planck_h() / (units.m_e * units.c0);
}

double delta_lambda(const Units& units, double theta) {
  return compton_wavelength(units) * (1.0 - std::cos(theta));
}

ComptonRow angular_shift(const Units& units, double theta, std::optional<double> lambda_in) {
  ComptonRow row;
  row.theta = theta;
  row.delta_lambda = delta_lambda(units, theta);
  if (!lambda_in) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.lambda_out = row.nu_out = row.u_recoil = nan;
    return row;
  }
  if (!(*lambda_in > 0.0)) throw InvalidArgument("incident wavelength must be positive");
  const double omega_in = 2.0 * std::numbers::pi * units.c0 / *lambda_in;
  row.u_recoil = recoil_velocity(units, omega_in) * std::cos(theta);
  row.lambda_out = *lambda_in + row.delta_lambda;
  row.nu_out = units.c0 / row.lambda_out;
  return row;
}

std::vector<ComptonRow> angular_sweep(const Units& units, double theta_start, double theta_end,
                                      int steps, std::optional<double> lambda_in) {
  if (steps < 1) throw InvalidArgument("angle sweep needs at least one step");
  std::vector<ComptonRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double theta =
        steps == 1 ? theta_start : theta_start + (theta_end - theta_start) * i / (steps - 1);
    rows.push_back(angular_shift(units, theta, lambda_in));
  }
  return rows;
}

double emission_rate_density(const Units& units, double nu, double volume) {
  if (!(volume > 0.0)) throw InvalidArgument("volume must be positive");
  return units.planck_h() * nu * nu / volume;
}

std::size_t write_compton_csv(std::ostream& out, std::span<const ComptonRow> rows) {
  CsvWriter csv(out);
  csv.header({"theta_deg", "delta_lambda", "lambda_out", "nu_out", "u_recoil"});
  for (const auto& r : rows)
    csv.row(r.theta * 180.0 / std::numbers::pi, r.delta_lambda, r.lambda_out, r.nu_out,
            r.u_recoil);
  return csv.rows();
}

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_compton_svg(std::ostream& out, std::span<const ComptonRow> rows,
                       double lambda_compton) {
  constexpr double width = 640, height = 400, left = 60, right = 20, top = 20, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double deg_min = 0.0, deg_max = 180.0;
  if (!rows.empty()) {
    deg_min = deg_max = rows.front().theta * 180.0 / std::numbers::pi;
    for (const auto& r : rows) {
      const double d = r.theta * 180.0 / std::numbers::pi;
      deg_min = std::min(deg_min, d);
      deg_max = std::max(deg_max, d);
    }
    if (deg_max == deg_min) deg_max = deg_min + 1.0;
  }
  auto px = [&](double deg) { return left + (deg - deg_min) / (deg_max - deg_min) * plot_w; };
  auto py = [&](double ratio) { return top + plot_h - ratio / 2.0 * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
      << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\""
      << fixed(left + plot_w) << "\" y2=\"" << fixed(top + plot_h) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left)
      << "\" y2=\"" << fixed(top + plot_h) << "\" stroke=\"black\"/>\n";
  for (double ratio : {0.0, 1.0, 2.0}) {
    out << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(ratio) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << fixed(ratio) << "</text>\n";
  }
  out << "<text x=\"" << fixed(left) << "\" y=\"" << fixed(height - 25)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << fixed(deg_min) << "</text>\n";
  out << "<text x=\"" << fixed(left + plot_w) << "\" y=\"" << fixed(height - 25)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << fixed(deg_max) << "</text>\n";
  out << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(height - 8)
      << "\" font-size=\"13\" text-anchor=\"middle\">theta (deg)</text>\n";
  out << "<text x=\"15\" y=\"" << fixed(top + plot_h / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << fixed(top + plot_h / 2) << ")\">delta lambda / lambda_C</text>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const auto& r : rows) {
    if (!first) out << ' ';
    first = false;
    out << fixed(px(r.theta * 180.0 / std::numbers::pi)) << ','
        << fixed(py(r.delta_lambda / lambda_compton));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace exwave
