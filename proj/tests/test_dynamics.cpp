#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "vcoh/dynamics.hpp"
#include "vcoh/oracle.hpp"

using namespace vcoh;
using vcoh::test::cabs;

namespace {

// G(t) from the two roots of s^2 + a s + c = 0 (a = kappa + i delta,
// c = gamma0 kappa (1 +- theta) / 2) by partial fractions of (s + a)/(s^2 + a s + c).
// Independent of the cosh/sinh route.
cplx residuePropagator(const SystemParams& p, double sign, double t) {
  const cplx a{p.kappa, p.delta};
  const double c = 0.5 * p.gamma0 * p.kappa * (1.0 + sign * p.theta);
  const cplx disc = std::sqrt(a * a - 4.0 * c);
  const cplx s1 = 0.5 * (-a + disc);
  const cplx s2 = 0.5 * (-a - disc);
  return ((s1 + a) * std::exp(s1 * t) - (s2 + a) * std::exp(s2 * t)) / (s1 - s2);
}

// Lorentzian spectral density integrated against the detuned phase factor,
// with omega - omega0 = kappa tan(u) so the integrand is bounded.
cplx kernelByQuadrature(const SystemParams& p, double tau) {
  const int n = 2'000'000;
  const double lo = -std::numbers::pi / 2.0;
  const double h = std::numbers::pi / n;
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double u = lo + (k + 0.5) * h;
    const double x = p.kappa * std::tan(u);
    sum += std::exp(cplx{0.0, -(p.delta + x) * tau});
  }
  return p.gamma0 * p.kappa / (2.0 * std::numbers::pi) * h * sum;
}

}  // namespace

TEST_CASE("complex rate examples") {
  SUBCASE("theta = 1, minus branch reduces to kappa + i delta") {
    const SystemParams p{0.7, 1.3, 4.0, 1.0};
    CHECK(cabs(complexRate(p, Branch::Minus), {1.3, 4.0}) < 1e-14);
  }
  SUBCASE("radicand forced to zero") {
    const SystemParams p{1.0, 2.0, 0.0, 0.0};
    CHECK(std::abs(complexRate(p, Branch::Plus)) == 0.0);
  }
  SUBCASE("underdamped rate squares back to the radicand") {
    const SystemParams p{1.0, 0.1, 0.0, 0.0};
    const cplx r = complexRate(p, Branch::Plus);
    CHECK(cabs(r, {0.0, 0.43588989435406735}) < 1e-12);
    CHECK(cabs(r * r, {0.01 - 0.2, 0.0}) < 1e-14);
  }
}

TEST_CASE("memory kernel") {
  SUBCASE("zero lag") {
    const SystemParams p{2.0, 0.5, 3.0, 0.4};
    const KernelValue k = memoryKernel(p, 0.0);
    CHECK(cabs(k.f, 0.5) < 1e-15);
    CHECK(cabs(k.fCross, 0.2) < 1e-15);
  }
  SUBCASE("theta = 0 has no cross kernel") {
    const SystemParams p{1.0, 1.0, 5.0, 0.0};
    for (double tau : {0.0, 0.3, 7.0}) CHECK(std::abs(memoryKernel(p, tau).fCross) == 0.0);
  }
  SUBCASE("detuned value agrees with quadrature of the Lorentzian") {
    const SystemParams p{1.0, 1.0, 5.0, 0.0};
    const cplx f = memoryKernel(p, 1.0).f;
    // 0.5 e^{-1} e^{+5i}
    CHECK(cabs(f, {0.0521767431, 0.1763842631}) < 1e-9);
    CHECK(cabs(f, kernelByQuadrature(p, 1.0)) < 1e-4);
  }
}

TEST_CASE("propagator") {
  SUBCASE("t = 0") {
    const PropagatorPair g = propagator({1.0, 0.1, 20.0, 0.5}, 0.0);
    CHECK(g.gPlus == cplx{1.0});
    CHECK(g.gMinus == cplx{1.0});
    CHECK(g.q1 == cplx{1.0});
    CHECK(g.q2 == cplx{0.0});
  }
  SUBCASE("theta = 1 keeps the antisymmetric branch at 1") {
    for (double t : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
      CHECK(cabs(propagator({1.0, 0.1, 20.0, 1.0}, t).gMinus, 1.0) < 1e-12);
      CHECK(cabs(propagator({0.1, 1.0, 0.0, 1.0}, t).gMinus, 1.0) < 1e-12);
    }
  }
  SUBCASE("matches the RK4 memory-kernel oracle at t = 1") {
    const SystemParams p{1.0, 0.1, 0.0, 0.0};
    OracleConfig cfg;
    cfg.maxTime = 1.0;
    const auto series = oracleIntegrate({1.0, 0.0, 0.0}, p, cfg);
    CHECK(cabs(propagator(p, 1.0).gPlus, series.values.back().dA) < 1e-8);
  }
  SUBCASE("matches the residue formula away from degenerate rates") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      const SystemParams p = vcoh::test::randomParams(rng);
      const double t = std::uniform_real_distribution<double>(0.0, 30.0)(rng);
      const PropagatorPair g = propagator(p, t);
      CHECK(cabs(g.gPlus, residuePropagator(p, +1.0, t)) < 1e-9);
      CHECK(cabs(g.gMinus, residuePropagator(p, -1.0, t)) < 1e-9);
    }
  }
  SUBCASE("degenerate rate uses the series limit") {
    // kappa = 2 gamma0 (1 + theta) with delta = 0 makes R+ vanish; the exact
    // propagator is then (1 + kappa t/2) e^{-kappa t/2}.
    const SystemParams p{1.0, 2.0, 0.0, 0.0};
    for (double t : {0.0, 1e-8, 0.5, 3.0}) {
      const double expect = (1.0 + t) * std::exp(-t);
      CHECK(cabs(propagator(p, t).gPlus, expect) < 1e-14);
    }
    // Just off degeneracy the series and cosh forms must join smoothly.
    const SystemParams near{1.0, 2.0 + 1e-13, 0.0, 0.0};
    CHECK(cabs(propagator(near, 1.0).gPlus, 2.0 * std::exp(-1.0)) < 1e-10);
  }
  SUBCASE("large |Re R t| stays finite and accurate") {
    const SystemParams p{0.1, 50.0, 0.0, 0.0};
    for (double t : {1.0, 10.0, 100.0}) {
      const cplx g = propagator(p, t).gPlus;
      CHECK(std::isfinite(g.real()));
      CHECK(cabs(g, residuePropagator(p, +1.0, t)) < 1e-12);
    }
  }
  SUBCASE("rejects negative time") {
    CHECK_THROWS_AS(propagator({1.0, 1.0, 0.0, 0.0}, -1.0), Error);
  }
}

TEST_CASE("propagator invariants over random parameters") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> time(0.0, 50.0);
  for (int i = 0; i < 500; ++i) {
    const SystemParams p = vcoh::test::randomParams(rng);
    const double t = time(rng);
    const PropagatorPair g = propagator(p, t);
    INFO("gamma0=" << p.gamma0 << " kappa=" << p.kappa << " delta=" << p.delta
                   << " theta=" << p.theta << " t=" << t);
    // branch invariance
    const PropagatorPair flipped = propagatorWithRates(
        p, -complexRate(p, Branch::Plus), -complexRate(p, Branch::Minus), t);
    CHECK(cabs(g.gPlus, flipped.gPlus) < 1e-12);
    CHECK(cabs(g.gMinus, flipped.gMinus) < 1e-12);
    // q1^2 - q2^2 = G+ G-
    CHECK(cabs(g.q1 * g.q1 - g.q2 * g.q2, g.gPlus * g.gMinus) < 1e-12);
    CHECK(g.q1 == 0.5 * (g.gPlus + g.gMinus));
    CHECK(g.q2 == 0.5 * (g.gPlus - g.gMinus));
    CHECK(std::abs(g.gPlus) <= 1.0 + 1e-10);
    CHECK(std::abs(g.gMinus) <= 1.0 + 1e-10);
  }
}

TEST_CASE("evolve amplitudes") {
  SUBCASE("t = 0 is the identity") {
    const AmplitudeVector a{{0.3, 0.1}, {-0.5, 0.2}, {0.1, -0.4}};
    const AmplitudeVector b = evolveAmplitudes(a, {1.0, 0.1, 3.0, 0.5}, 0.0);
    CHECK(b.dA == a.dA);
    CHECK(b.dB == a.dB);
    CHECK(b.dC == a.dC);
  }
  SUBCASE("antisymmetric state is decoherence free at theta = 1") {
    const double h = std::numbers::sqrt2 / 2.0;
    for (double t : {0.5, 5.0, 50.0}) {
      const AmplitudeVector b = evolveAmplitudes({-h, h, 0.0}, {1.0, 0.1, 20.0, 1.0}, t);
      CHECK(cabs(b.dA, -h) < 1e-12);
      CHECK(cabs(b.dB, h) < 1e-12);
    }
  }
  SUBCASE("excited |B> at theta = 1 tends to (-1/2, 1/2)") {
    const AmplitudeVector b = evolveAmplitudes({0.0, 1.0, 0.0}, {0.1, 1.0, 0.0, 1.0}, 400.0);
    CHECK(cabs(b.dA, -0.5) < 1e-12);
    CHECK(cabs(b.dB, 0.5) < 1e-12);
    const AmplitudeVector lim = asymptoticAmplitudes({0.0, 1.0, 0.0}, {0.1, 1.0, 0.0, 1.0});
    CHECK(cabs(lim.dA, -0.5) == 0.0);
    CHECK(cabs(lim.dB, 0.5) == 0.0);
  }
  SUBCASE("sub-normalized input passes through linearly") {
    const SystemParams p{1.0, 0.1, 5.0, 0.3};
    const AmplitudeVector full{0.6, 0.8, 0.0};
    const AmplitudeVector half{0.3, 0.4, 0.0};
    const AmplitudeVector a = evolveAmplitudes(full, p, 2.0);
    const AmplitudeVector b = evolveAmplitudes(half, p, 2.0);
    CHECK(cabs(0.5 * a.dA, b.dA) < 1e-15);
    CHECK(cabs(0.5 * a.dB, b.dB) < 1e-15);
  }
}

TEST_CASE("evolution invariants over random states") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> time(0.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    SystemParams p = vcoh::test::randomParams(rng);
    const AmplitudeVector a0 = vcoh::test::randomState(rng, true);
    const double t = time(rng);
    const AmplitudeVector a = evolveAmplitudes(a0, p, t);
    CHECK(a.dC == a0.dC);
    CHECK(a.norm2() <= 1.0 + 1e-10);

    // theta = 0: no cross feeding
    p.theta = 0.0;
    const PropagatorPair g = propagator(p, t);
    CHECK(std::abs(g.q2) < 1e-12);
    CHECK(cabs(evolveAmplitudes(a0, p, t).dA, g.gPlus * a0.dA) < 1e-12);

    // theta = 1: dA - dB is conserved
    p.theta = 1.0;
    const AmplitudeVector b = evolveAmplitudes(a0, p, t);
    CHECK(cabs(b.dA - b.dB, a0.dA - a0.dB) < 1e-12);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((SystemParams{0.0, 1.0, 0.0, 0.0}.validate()), Error);
  CHECK_THROWS_AS((SystemParams{1.0, -1.0, 0.0, 0.0}.validate()), Error);
  CHECK_THROWS_AS((SystemParams{1.0, 1.0, 0.0, 1.01}.validate()), Error);
  CHECK_THROWS_AS((SystemParams{1.0, 1.0, NAN, 0.0}.validate()), Error);
  CHECK_NOTHROW((SystemParams{1.0, 1.0, -3.0, -1.0}.validate()));
}
