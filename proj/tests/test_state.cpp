#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "mqdiscord/state.hpp"
#include "oracles.hpp"

using namespace mqd;
using std::numbers::pi;

namespace {
double max_abs(const DensityMatrix4& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("dipolar coupling geometry") {
  CHECK(dipolar_coupling({1.0, 1.0, std::acos(1.0 / std::sqrt(3.0))}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(dipolar_coupling({1.0, 1.0, pi / 2}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dipolar_coupling({1.0, 2.0, 0.0}) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK_THROWS_AS(dipolar_coupling({1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("thermal state populations") {
  const XState s = thermal_state(2.0);
  // exp(2) / (exp(2) + 2 + exp(-2))
  CHECK(s.r11 == doctest::Approx(0.77580349257437592671).epsilon(1e-14));
  CHECK(s.r22 == doctest::Approx(s.r33));
  CHECK(s.trace() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s.r14) == 0.0);

  const XState inf = thermal_state(700.0);
  CHECK(inf.r11 == 1.0);
  CHECK(inf.r44 == 0.0);
  CHECK(thermal_state(0.0).r11 == doctest::Approx(0.25));

  CHECK_THROWS_AS(thermal_state(-0.1), DomainError);
  CHECK_THROWS_AS(thermal_state(std::nan("")), DomainError);
}

TEST_CASE("thermal state against dense exponential") {
  for (double b : {0.0, 0.3, 1.0, 4.0, 15.0}) {
    CHECK(max_abs(thermal_state(b).matrix() - oracle::thermal(b)) < 1e-14);
  }
}

TEST_CASE("Hamiltonian and I_z built from ladder operators") {
  CHECK(max_abs(mq_hamiltonian(1.7) - oracle::hamiltonian(1.7)) < 1e-15);
  CHECK(max_abs(iz_operator() - oracle::total_iz()) < 1e-15);
}

TEST_CASE("evolved state matches independent propagation") {
  for (double b : oracle::linspace(0.0, 6.0, 9))
    for (double d : {0.5, 1.0, -2.0})
      for (double tau : oracle::linspace(0.0, 4.0, 9)) {
        const DimerParams p{b, d, tau, 1.0, 0.0};
        const DensityMatrix4 want = oracle::evolved(b, d, tau);
        CHECK(max_abs(evolve(thermal_state(b), p).matrix() - want) < 1e-13);
        CHECK(max_abs(evolved_state(b, p.dtau()).matrix() - want) < 1e-13);
        CHECK(max_abs(evolve_unitary_oracle(thermal_state(b).matrix(), p) - want) < 1e-13);
      }
}

TEST_CASE("Liouville equation residual") {
  // i d rho / d tau = [H, rho] by central difference.
  const double b = 1.0, phi = 0.7, h = 1e-5;
  const DensityMatrix4 drho =
      (evolved_state(b, phi + h).matrix() - evolved_state(b, phi - h).matrix()) / (2.0 * h);
  const DensityMatrix4 rho = evolved_state(b, phi).matrix();
  const DensityMatrix4 hm = mq_hamiltonian(1.0);
  const DensityMatrix4 residual = cplx(0.0, 1.0) * drho - (hm * rho - rho * hm);
  CHECK(max_abs(residual) <= 1e-7);
}

TEST_CASE("general X-state evolution preserves structure") {
  XState s;
  s.r11 = 0.4;
  s.r22 = 0.2;
  s.r33 = 0.15;
  s.r44 = 0.25;
  s.r14 = cplx(0.1, -0.05);
  REQUIRE(s.is_valid());
  for (double tau : oracle::linspace(0.0, 3.0, 7)) {
    const DimerParams p{0.0, 1.3, tau, 1.0, 0.0};
    const XState e = evolve(s, p);
    CHECK(e.is_valid());
    CHECK(e.r22 == s.r22);
    CHECK(e.r33 == s.r33);
    const oracle::Mat4 u = oracle::propagator(oracle::hamiltonian(1.3), tau);
    CHECK(max_abs(e.matrix() - u * s.matrix() * u.adjoint()) < 1e-14);
  }
}

TEST_CASE("evolved state is a density matrix") {
  for (double b : oracle::linspace(0.0, 60.0, 13))
    for (double phi : oracle::linspace(0.0, 2 * pi, 13)) {
      const XState s = evolved_state(b, phi);
      CHECK(s.is_valid());
      const DensityCheck d = check_density(s.matrix());
      CHECK(d.hermiticity == 0.0);
      CHECK(d.trace_error < 1e-14);
      CHECK(d.min_eigenvalue > -1e-14);
    }
}

TEST_CASE("purity and spectrum are independent of tau") {
  for (double b : {0.0, 0.5, 2.0, 9.0}) {
    const DensityMatrix4 r0 = thermal_state(b).matrix();
    const double p0 = (r0 * r0).trace().real();
    for (double phi : oracle::linspace(0.0, 2 * pi, 17)) {
      const DensityMatrix4 r = evolved_state(b, phi).matrix();
      CHECK((r * r).trace().real() == doctest::Approx(p0).epsilon(1e-13));
    }
  }
}

TEST_CASE("pure-state limit is idempotent") {
  for (double phi : oracle::linspace(0.0, 2 * pi, 11)) {
    const DensityMatrix4 r = evolved_state(40.0, phi).matrix();
    CHECK(max_abs(r * r - r) <= 1e-10);
  }
  const XState s = evolved_state(std::numeric_limits<double>::infinity(), 1.0);
  CHECK(s.is_valid());
  CHECK(s.r22 == 0.0);
}

TEST_CASE("xi parametrisation") {
  for (double x : oracle::linspace(0.0, 1.0, 11)) {
    const DimerParams p = DimerParams::from_xi(1.0, x);
    CHECK(p.xi() == doctest::Approx(x).epsilon(1e-14));
    CHECK(max_abs(evolved_state_xi(1.0, x).matrix() - evolved_state(1.0, std::acos(x)).matrix()) < 1e-15);
  }
  CHECK(DimerParams{1.0, 1.0, pi, 1.0, 0.0}.xi() == doctest::Approx(1.0));
  CHECK_THROWS_AS(DimerParams::from_xi(1.0, 1.1), DomainError);
  CHECK_THROWS_AS(DimerParams::from_xi(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(evolved_state_xi(1.0, 2.0), DomainError);
}

TEST_CASE("heat operator is the rotated I_z") {
  for (double tau : oracle::linspace(-1.0, 5.0, 13)) {
    const DimerParams p{1.0, 1.0, tau, 1.0, 0.0};
    const oracle::Mat4 u = oracle::propagator(oracle::hamiltonian(1.0), tau);
    CHECK(max_abs(heat_operator(p) - u * oracle::total_iz() * u.adjoint()) < 1e-14);
  }
}

TEST_CASE("random density matrices pass the density check") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const DensityCheck d = check_density(oracle::random_density(rng));
    CHECK(d.hermiticity < 1e-15);
    CHECK(d.trace_error < 1e-14);
    CHECK(d.min_eigenvalue >= -1e-14);
  }
}
