#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "exwave/compton.hpp"
#include "exwave/energetics.hpp"
#include "exwave/errors.hpp"
#include "exwave/fields.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace exwave;

namespace {

const Units kNat = make_units(Scheme::natural);
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("recoil velocity examples") {
  CHECK(recoil_velocity(kNat, 0.01) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(recoil_velocity(kNat, 0.0) == 0.0);
  CHECK(recoil_velocity(kNat, 0.08) == doctest::Approx(2 * recoil_velocity(kNat, 0.02)));
  CHECK_THROWS_AS(recoil_velocity(kNat, 1.0), RelativisticRecoil);
  CHECK_THROWS_AS(recoil_velocity(kNat, -1.0), InvalidArgument);
}

TEST_CASE("doppler shift examples") {
  const DopplerShift still = doppler_shift(kNat, 2.0, 0.0);
  CHECK(still.exact == 2.0);
  CHECK(still.first_order == 2.0);
  const DopplerShift d = doppler_shift(kNat, 1.0, 0.1);
  CHECK(d.exact == doctest::Approx(std::sqrt(0.9 / 1.1)).epsilon(1e-15));
  CHECK(d.exact == doctest::Approx(0.9045340337).epsilon(1e-10));
  CHECK(d.first_order == doctest::Approx(0.9).epsilon(1e-15));
  const DopplerShift slow = doppler_shift(kNat, 1.0, 1e-4);
  CHECK(std::abs(slow.exact / slow.first_order - 1.0) < 1e-8);
  CHECK_THROWS_AS(doppler_shift(kNat, 1.0, 1.0), SuperluminalBoost);
}

TEST_CASE("compton wavelength") {
  CHECK(compton_wavelength(kNat) == doctest::Approx(2 * kPi).epsilon(1e-15));
  const double si = compton_wavelength(make_units(Scheme::si));
  const double independent = oracle::kPlanckSI / (oracle::kElectronMassSI * oracle::kLightSI);
  CHECK(oracle::rel(si, independent) < 1e-4);
  CHECK(oracle::rel(si, 2.4263e-12) < 1e-4);
  CHECK(oracle::rel(si, oracle::kComptonSI) < 1e-9);
}

TEST_CASE("longitudinal observation shifts by exactly lambda_C") {
  const double lambda_in = 500.0;
  const ComptonRow back = angular_shift(kNat, kPi, lambda_in);
  const ComptonRow side = angular_shift(kNat, kPi / 2, lambda_in);
  CHECK(side.lambda_out - lambda_in == doctest::Approx(compton_wavelength(kNat)).epsilon(1e-12));
  CHECK(back.delta_lambda == 2 * compton_wavelength(kNat));
}

TEST_CASE("angular shift examples") {
  const double lc = compton_wavelength(kNat);
  CHECK(angular_shift(kNat, 0.0).delta_lambda == 0.0);
  CHECK(angular_shift(kNat, kPi).delta_lambda == 2 * lc);
  CHECK(angular_shift(kNat, kPi / 3).delta_lambda == doctest::Approx(0.5 * lc).epsilon(1e-15));
  CHECK(std::isnan(angular_shift(kNat, 1.0).lambda_out));
}

TEST_CASE("recoil direction follows the observation angle") {
  const double lambda_in = 200 * kPi;  // omega = 0.01, u0 = 0.1
  const ComptonRow r = angular_shift(kNat, kPi / 3, lambda_in);
  CHECK(r.u_recoil == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r.nu_out == doctest::Approx(1.0 / r.lambda_out));
  CHECK_THROWS_AS(angular_shift(kNat, 0.0, compton_wavelength(kNat)), RelativisticRecoil);
}

TEST_CASE("recoil kinetic energy matches the electron energy partition") {
  for (double omega : {1e-4, 0.01, 0.25}) {
    const double u = recoil_velocity(kNat, omega);
    const EnergyPartition e = energy_partition(canonical_electron(kNat, u));
    CHECK(oracle::rel(kNat.hbar * omega, kNat.m_e * u * u) < 1e-12);
    CHECK(oracle::rel(e.w_total, kNat.hbar * omega) < 1e-12);
  }
}

TEST_CASE("emission rate per volume agrees with the transfer rate") {
  gen::Gen g;
  for (int trial = 0; trial < 100; ++trial) {
    const double nu = g.log_uniform(1e-3, 1e3);
    const double volume = g.log_uniform(1e-2, 1e4);
    CHECK(oracle::rel(emission_rate_density(kNat, nu, volume), transfer_rate(kNat, nu).rate / volume) < 1e-15);
  }
  CHECK_THROWS_AS(emission_rate_density(kNat, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("property: shift is independent of the incident wavelength and symmetric") {
  gen::Gen g;
  for (int trial = 0; trial < 300; ++trial) {
    const double theta = g.uniform(0.0, 2 * kPi);
    const double a = angular_shift(kNat, theta, g.log_uniform(100, 1e6)).delta_lambda;
    const double b = angular_shift(kNat, theta, g.log_uniform(100, 1e6)).delta_lambda;
    CHECK(a == b);
    CHECK(angular_shift(kNat, -theta).delta_lambda == doctest::Approx(a).epsilon(1e-12));
    CHECK(angular_shift(kNat, 2 * kPi - theta).delta_lambda ==
          doctest::Approx(a).scale(compton_wavelength(kNat)).epsilon(1e-12));
    CHECK(a >= 0.0);
  }
}

TEST_CASE("property: shift is monotone on [0, pi]") {
  const auto rows = angular_sweep(kNat, 0.0, kPi, 721);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].delta_lambda >= rows[i - 1].delta_lambda);
}

TEST_CASE("sweep, csv and svg") {
  const auto rows = angular_sweep(kNat, 0.0, kPi, 19, 200 * kPi);
  REQUIRE(rows.size() == 19);
  std::ostringstream csv;
  CHECK(write_compton_csv(csv, rows) == 19);
  CHECK(csv.str().rfind("theta_deg,delta_lambda,lambda_out,nu_out,u_recoil\n0,0,", 0) == 0);
  std::ostringstream svg;
  write_compton_svg(svg, rows, compton_wavelength(kNat));
  const std::string s = svg.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("<polyline") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK_THROWS_AS(angular_sweep(kNat, 0.0, 1.0, 0), InvalidArgument);
}
