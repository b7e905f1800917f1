#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <sstream>

#include "exwave/errors.hpp"
#include "exwave/uncertainty.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace exwave;

namespace {

const Units kNat = make_units(Scheme::natural);
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("uncertainty chain at speed 0.1") {
  const UncertaintyReport r = uncertainty_floor(canonical_electron(kNat, 0.1));
  CHECK(r.k == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(r.wavelength == doctest::Approx(20 * kPi).epsilon(1e-15));
  CHECK(r.delta_v == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(r.delta_k == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(r.delta_x == doctest::Approx(10 * kPi).epsilon(1e-15));
  CHECK(oracle::rel(r.product_xp, kPi) < 1e-12);
  CHECK(r.floor == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(r.ok);
}

TEST_CASE("raising the potential spread raises the product linearly") {
  const ParticleModel el = canonical_electron(kNat, 0.1);
  const UncertaintyReport r = uncertainty_floor(el, 0.02);
  CHECK(oracle::rel(r.product_xp, 2 * kPi) < 1e-12);
  CHECK(r.ok);
  CHECK_FALSE(uncertainty_floor(el, 0.005).ok);
}

TEST_CASE("photons are rejected") {
  CHECK_THROWS_AS(uncertainty_floor(canonical_photon(kNat, 1.0)), WrongKind);
}

TEST_CASE("canonical floor") {
  const CanonicalFloor n = canonical_floor(kNat);
  CHECK(n.h_half == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(n.hbar_half == 0.5);
  CHECK(n.ratio == doctest::Approx(2 * kPi).epsilon(1e-15));
  const CanonicalFloor s = canonical_floor(make_units(Scheme::si));
  CHECK(oracle::rel(s.h_half, oracle::kPlanckSI / 2) < 1e-9);
  CHECK(s.h_half == doctest::Approx(3.313e-34).epsilon(1e-3));
  CHECK(s.ratio == doctest::Approx(2 * kPi).epsilon(1e-15));
}

TEST_CASE("bell resolution examples") {
  // Unit wavelength: k = 2 pi = m u / hbar with m = hbar = 1 needs u = 2 pi,
  // so the mass is scaled down to keep the speed subluminal.
  const Units light = with_overrides(kNat, {{"m_e", 4 * kPi}});
  const BellResolution unit = bell_resolution_check(canonical_electron(light, 0.5));
  CHECK(unit.required_dx == doctest::Approx(0.5).epsilon(1e-15));
  const Units heavy = with_overrides(kNat, {{"m_e", 2.0}});
  const BellResolution r = bell_resolution_check(canonical_electron(heavy, 0.5));
  CHECK(r.uncertainty_dx == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(r.violates);
}

TEST_CASE("property: product is h/2 and invariant under speed rescaling") {
  gen::Gen g;
  for (int trial = 0; trial < 100; ++trial) {
    const double speed = g.uniform(0.001, 0.09);
    const double base = uncertainty_floor(canonical_electron(kNat, speed)).product_xp;
    CHECK(oracle::rel(base, kPi) < 1e-12);
    for (double s : {0.5, 2.0, 10.0}) {
      const double scaled = uncertainty_floor(canonical_electron(kNat, s * speed)).product_xp;
      CHECK(oracle::rel(scaled, base) < 1e-12);
    }
    CHECK(bell_resolution_check(canonical_electron(kNat, speed)).violates);
  }
}

TEST_CASE("csv header") {
  std::ostringstream out;
  const std::vector<UncertaintyReport> rows{uncertainty_floor(canonical_electron(kNat, 0.1))};
  CHECK(write_uncertainty_csv(out, rows) == 1);
  CHECK(out.str().rfind("speed,k,lambda,delta_v,delta_k,delta_x,product,floor,ok\n", 0) == 0);
  CHECK(out.str().find(",true\n") != std::string::npos);
}
