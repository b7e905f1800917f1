#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "exwave/csv.hpp"
#include "exwave/errors.hpp"
#include "exwave/units.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace exwave;

TEST_CASE("natural scheme is all ones") {
  const Units u = make_units(Scheme::natural);
  CHECK(u.hbar == 1.0);
  CHECK(u.c0 == 1.0);
  CHECK(u.m_e == 1.0);
  CHECK(u.e_charge == 1.0);
  CHECK(u.C_density == 1.0);
  CHECK(u.mu_medium == 1.0);
  CHECK(u.eps_medium == 1.0);
  CHECK(u.planck_h() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(is_valid(u));
}

TEST_CASE("si scheme matches the transcribed CODATA values") {
  const Units u = make_units(Scheme::si);
  CHECK(u.hbar == oracle::kHbarSI);
  CHECK(u.c0 == oracle::kLightSI);
  CHECK(u.m_e == oracle::kElectronMassSI);
  CHECK(u.e_charge == oracle::kElementaryChargeSI);
  CHECK(oracle::rel(u.planck_h(), oracle::kPlanckSI) < 1e-9);
  CHECK(u.scheme == Scheme::si);
}

TEST_CASE("make_units is pure") {
  for (Scheme s : {Scheme::natural, Scheme::si}) CHECK(make_units(s) == make_units(s));
}

TEST_CASE("scheme names round trip") {
  CHECK(parse_scheme("natural") == Scheme::natural);
  CHECK(parse_scheme(to_string(Scheme::si)) == Scheme::si);
  CHECK_THROWS_AS(parse_scheme("cgs"), InvalidArgument);
}

TEST_CASE("sigma_bar examples") {
  const Units nat = make_units(Scheme::natural);
  CHECK(sigma_bar(nat, 1.0) == 1.0);
  CHECK(sigma_bar(nat, 0.0) == 0.0);
  const Units custom = with_overrides(nat, {{"e_charge", 2.0}, {"m_e", 4.0}});
  CHECK(sigma_bar(custom, 8.0) == 4.0);
  CHECK_THROWS_AS(sigma_bar(nat, -1.0), InvalidArgument);
}

TEST_CASE("overrides reject unknown keys and non-positive values") {
  const Units nat = make_units(Scheme::natural);
  CHECK_THROWS_AS(with_overrides(nat, {{"planck", 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(with_overrides(nat, {{"c0", 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(with_overrides(nat, {{"hbar", -2.0}}), InvalidArgument);
  CHECK(with_overrides(nat, {{"c0", 3.0}}).c0 == 3.0);
}

TEST_CASE("density to charge ratio recovers m/e for random constants") {
  gen::Gen g;
  for (int i = 0; i < 200; ++i) {
    Units u = with_overrides(make_units(Scheme::natural),
                             {{"e_charge", g.log_uniform(1e-3, 1e3)}, {"m_e", g.log_uniform(1e-3, 1e3)}});
    const double rho_bar = g.log_uniform(1e-6, 1e6);
    CHECK(rho_bar / sigma_bar(u, rho_bar) * u.charge_per_mass() == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("format_double keeps 17 digits and folds negative zero") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(2.0) == "2");
}
