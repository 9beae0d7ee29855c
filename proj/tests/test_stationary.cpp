#include <doctest.h>

#include <random>

#include "wgqed/errors.hpp"
#include "wgqed/stationary.hpp"

using namespace wgqed;

namespace {

SystemParams desk() {
  SystemParams p;
  p.omega_q = 200.0;
  p.gamma_rad = 1.0;
  p.v_g = 1.0;
  return p;
}

// Weak-probe lossy amplitudes written out directly.
cplx lossy_r(const SystemParams& p, double w) {
  const double gamma = 0.5 * p.gamma_rad + p.gamma_phi + 0.5 * p.gamma_loss;
  return -kI * (0.5 * p.gamma_rad) / (w - p.omega_q + kI * gamma);
}

cplx lossy_t(const SystemParams& p, double w) {
  const double gamma = 0.5 * p.gamma_rad + p.gamma_phi + 0.5 * p.gamma_loss;
  return (w - p.omega_q + kI * (p.gamma_phi + 0.5 * p.gamma_loss)) /
         (w - p.omega_q + kI * gamma);
}

}  // namespace

TEST_CASE("transmission examples") {
  const SystemParams p;
  CHECK(std::abs(transmission(p, p.omega_q)) == 0.0);
  const cplx half = transmission(p, p.omega_q + 0.5 * p.gamma_rad);
  CHECK(std::abs(half - cplx{0.5, -0.5}) < 1e-12);
  CHECK(std::norm(half) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(std::norm(transmission(p, p.omega_q + 1e3 * p.gamma_rad)) - 1.0) < 1e-6);
}

TEST_CASE("reflection examples") {
  const SystemParams p;
  CHECK(std::abs(reflection(p, p.omega_q) - cplx{-1.0, 0.0}) < 1e-15);
  CHECK(std::norm(reflection(p, p.omega_q + 0.5 * p.gamma_rad)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("lossless flux conservation and T = 1 + R") {
  const SystemParams p = desk();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> det(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const double w = p.omega_q + det(rng);
    const cplx t = transmission(p, w);
    const cplx r = reflection(p, w);
    REQUIRE(std::abs(std::norm(t) + std::norm(r) - 1.0) <= 1e-12);
    REQUIRE(std::abs(t - 1.0 - r) <= 1e-15);
  }
}

TEST_CASE("reflection is an even Lorentzian in detuning") {
  const SystemParams p = desk();
  for (double d : {0.01, 0.3, 1.0, 7.0, 40.0}) {
    const double up = std::norm(reflection(p, p.omega_q + d));
    const double down = std::norm(reflection(p, p.omega_q - d));
    CHECK(up == doctest::Approx(down).epsilon(1e-13));
    CHECK(up == doctest::Approx(0.25 / (d * d + 0.25)).epsilon(1e-13));
  }
}

TEST_CASE("driven reflection examples") {
  SystemParams p = desk();
  DriveSpec d{p.omega_q, 0.0};
  CHECK(std::abs(reflection_driven(p, d) + 1.0) < 1e-15);

  const double gamma = p.total_decoherence();
  d.rabi = std::sqrt((p.gamma_rad + p.gamma_loss) * gamma);
  CHECK(std::abs(reflection_driven(p, d) + 0.5) < 1e-15);

  p.gamma_phi = 0.5 * p.gamma_rad;
  d.rabi = 0.0;
  CHECK(std::abs(reflection_driven(p, d) + 0.5) < 1e-15);
}

TEST_CASE("driven transmission equals 1 + R and reduces to the weak-probe forms") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    SystemParams p = desk();
    p.gamma_rad = 0.1 + 2.0 * u(rng);
    p.gamma_phi = u(rng);
    p.gamma_loss = u(rng);
    const DriveSpec d{p.omega_q + 10.0 * (u(rng) - 0.5), 3.0 * u(rng)};
    REQUIRE(std::abs(transmission_driven(p, d) - 1.0 - reflection_driven(p, d)) <= 1e-12);
  }

  SystemParams p = desk();
  p.gamma_phi = 0.3;
  p.gamma_loss = 0.2;
  for (double det : {-3.0, -0.4, 0.0, 0.25, 2.0}) {
    const DriveSpec weak{p.omega_q + det, 1e-6};
    CAPTURE(det);
    CHECK(std::abs(reflection_driven(p, weak) - lossy_r(p, weak.omega_s)) < 1e-10);
    CHECK(std::abs(transmission_driven(p, weak) - lossy_t(p, weak.omega_s)) < 1e-10);
  }

  const SystemParams clean = desk();
  for (double det : {-3.0, 0.0, 0.7}) {
    const DriveSpec d{clean.omega_q + det, 0.0};
    CHECK(std::abs(transmission_driven(clean, d) - transmission(clean, d.omega_s)) < 1e-12);
  }
}

TEST_CASE("effective frequency reproduces the lossy amplitudes") {
  SystemParams p = desk();
  CHECK(effective_omega(p) == cplx{p.omega_q, 0.0});
  p.gamma_phi = p.gamma_rad;
  CHECK(std::abs(effective_omega(p) - cplx{p.omega_q, -p.gamma_rad}) < 1e-15);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    p.gamma_phi = u(rng);
    p.gamma_loss = u(rng);
    const double w = p.omega_q + 8.0 * (u(rng) - 0.5);
    REQUIRE(std::abs(reflection(p, w, Losses::included) - lossy_r(p, w)) <= 1e-12);
    REQUIRE(std::abs(transmission(p, w, Losses::included) - lossy_t(p, w)) <= 1e-12);
  }
}

TEST_CASE("losses prevent full extinction") {
  SystemParams p = desk();
  p.gamma_phi = 0.1;
  p.gamma_loss = 0.05;
  const double t2 = std::norm(transmission(p, p.omega_q, Losses::included));
  const double r2 = std::norm(reflection(p, p.omega_q, Losses::included));
  CHECK(t2 > 0.0);
  CHECK(t2 + r2 < 1.0);
}

TEST_CASE("reflection decreases with drive power") {
  SystemParams p = desk();
  p.gamma_phi = 0.05;
  for (double det : {0.0, 0.5, -2.0}) {
    double previous = 2.0;
    for (double rabi = 0.0; rabi < 5.0; rabi += 0.25) {
      const double r = std::abs(reflection_driven(p, {p.omega_q + det, rabi}));
      CHECK(r < previous);
      previous = r;
    }
  }
}

TEST_CASE("parameter validation") {
  SystemParams p = desk();
  CHECK_NOTHROW(p.validate());
  p.gamma_rad = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = desk();
  p.gamma_phi = -1.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = desk();
  p.v_g = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  CHECK_THROWS_AS((DriveSpec{-1.0, 0.0}.validate()), ValidationError);
  CHECK_THROWS_AS((DriveSpec{1.0, -1.0}.validate()), ValidationError);
  CHECK(SystemParams{}.wavelength() == doctest::Approx(0.06).epsilon(1e-14));
}
