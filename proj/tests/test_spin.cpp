#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "exwave/errors.hpp"
#include "exwave/spin.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace exwave;

namespace {

const Units kNat = make_units(Scheme::natural);

}  // namespace

TEST_CASE("rotation field examples") {
  CHECK(rotation_b_field(Kind::photon, canonical_photon(kNat, 1.0)) == doctest::Approx(2.0));
  // omega = m u^2 / hbar = 1 with u < 1 needs m > 1; e follows so m / e = 1.
  const Units heavy = with_overrides(kNat, {{"m_e", 4.0}, {"e_charge", 4.0}});
  const ParticleModel el = canonical_electron(heavy, 0.5);
  REQUIRE(el.single_mode().omega == doctest::Approx(1.0));
  CHECK(rotation_b_field(Kind::electron, el) == doctest::Approx(1.0));
  CHECK(rotation_b_field(Kind::electron, canonical_electron(kNat, 0.5)) ==
        doctest::Approx(0.25));
}

TEST_CASE("magnetic moment examples") {
  CHECK(magnetic_moment(kNat, 2.0, 0.5) == doctest::Approx(0.5));
  CHECK(magnetic_moment(kNat, 2.0, 0.0) == 0.0);
  CHECK(magnetic_moment(kNat, 1.0, 1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(magnetic_moment(kNat, 1.0, -1.0), InvalidArgument);
}

TEST_CASE("photon and electron solutions") {
  const SpinSolution ph = solve_spin(Kind::photon, canonical_photon(kNat, 1.0));
  CHECK(ph.g_factor == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ph.spin == doctest::Approx(kNat.hbar).epsilon(1e-15));
  CHECK(ph.product_gs == doctest::Approx(kNat.hbar).epsilon(1e-15));

  const SpinSolution el = solve_spin(Kind::electron, canonical_electron(kNat, 0.1));
  CHECK(el.g_factor == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(el.spin == doctest::Approx(0.5 * kNat.hbar).epsilon(1e-15));
  CHECK(el.product_gs == doctest::Approx(kNat.hbar).epsilon(1e-15));
  CHECK(el.energy_match);
  CHECK(el.axis_parallel);
}

TEST_CASE("energy check at omega = 3") {
  const SpinSolution ph = solve_spin(Kind::photon, canonical_photon(kNat, 3.0));
  CHECK(ph.w_qt == doctest::Approx(3.0));
  CHECK(ph.w_ed == doctest::Approx(3.0));
  CHECK(ph.energy_match);
}

TEST_CASE("spin axis lies along the propagation-polarization normal") {
  const SpinSolution s = solve_spin(Kind::photon, canonical_photon(kNat, 1.0, 1.0, {0, 1, 0}, {0, 0, 1}));
  CHECK(s.spin_axis.x == doctest::Approx(1.0));
  CHECK(s.axis_parallel);
}

TEST_CASE("SI solutions keep g s = hbar") {
  const Units si = make_units(Scheme::si);
  const SpinSolution el = solve_spin(Kind::electron, canonical_electron(si, 0.1 * si.c0));
  CHECK(oracle::rel(el.product_gs, si.hbar) < 1e-12);
  CHECK(oracle::rel(el.g_factor, 2.0) < 1e-12);
  CHECK(el.energy_match);
}

TEST_CASE("property: g s = hbar across a sweep of models") {
  gen::Gen g;
  for (int trial = 0; trial < 10; ++trial) {
    const auto [e, t] = g.frame();
    const ParticleModel ph = canonical_photon(kNat, g.log_uniform(0.01, 100), g.log_uniform(0.01, 100), e, t);
    const ParticleModel el = canonical_electron(kNat, g.uniform(0.001, 0.99), e, t);
    for (const auto& [kind, model] : {std::pair{Kind::photon, ph}, std::pair{Kind::electron, el}}) {
      const SpinSolution s = solve_spin(kind, model);
      CHECK(oracle::rel(s.product_gs, kNat.hbar) < 1e-12);
      CHECK(oracle::rel(s.w_ed, s.w_qt) < 1e-12);
      CHECK(s.axis_parallel);
    }
  }
}

TEST_CASE("csv header") {
  std::ostringstream out;
  const std::vector<SpinSolution> rows{solve_spin(Kind::photon, canonical_photon(kNat, 1.0))};
  CHECK(write_spin_csv(out, rows) == 1);
  CHECK(out.str() == "kind,omega,g,s,gs,W_qt,W_ed,match\nphoton,1,1,1,1,1,1,true\n");
}
