#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pseudoherm/closedform.hpp"
#include "pseudoherm/errors.hpp"

using namespace pseudoherm;

namespace {

// Sixth-order central differences.
template <typename F>
double d1(F f, double x, double h) {
  return (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) - 9 * f(x + 2 * h) + f(x + 3 * h)) /
         (60 * h);
}

template <typename F>
double d2(F f, double x, double h) {
  return (2 * f(x - 3 * h) - 27 * f(x - 2 * h) + 270 * f(x - h) - 490 * f(x) + 270 * f(x + h) - 27 * f(x + 2 * h) +
          2 * f(x + 3 * h)) /
         (180 * h * h);
}

}  // namespace

TEST_CASE("swanson energies") {
  CHECK(swanson_energy(SwansonModel(1, 1, 1), 0) == doctest::Approx(0.5));
  CHECK(swanson_energy(SwansonModel(1, 0.6, 0.75), 3) == doctest::Approx(2.8).epsilon(1e-14));
  for (double sigma : {0.2, 0.5, 0.9, 1.0}) {
    const SwansonModel m(1.7, 0.45, sigma);
    for (int n = 0; n < 10; ++n) CHECK(swanson_energy(m, n) == doctest::Approx(m.omega() * (n + 0.5)).epsilon(1e-14));
  }
}

TEST_CASE("swanson model validation") {
  const auto kind = [](auto make) {
    try {
      make();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  CHECK(kind([] { SwansonModel(1, 0.5, 0.0); }) == ErrorKind::Domain);
  CHECK(kind([] { SwansonModel(1, 0.5, 1.2); }) == ErrorKind::Domain);
  CHECK(kind([] { SwansonModel(0, 0.5, 0.5); }) == ErrorKind::Domain);
  CHECK(kind([] { SwansonModel(1, -0.5, 0.5); }) == ErrorKind::Domain);
  CHECK_NOTHROW(SwansonModel(1, 0.5, 1.0));
  const SwansonModel f = SwansonModel::from_frequency(1, 0.8, 0.6);
  CHECK(f.sigma() == doctest::Approx(0.75));
}

TEST_CASE("swanson wavefunction samples") {
  CHECK(swanson_wavefunction(SwansonModel(1, 1, 1), 0, 0.0) ==
        doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-14));
  CHECK(swanson_wavefunction(SwansonModel(1, 0.6, 0.75), 1, 0.0) == 0.0);
  // Exponent coefficient: α₀·(mΛ/σ) = −0.125·0.8.
  const SwansonModel m(1, 0.6, 0.75);
  CHECK(m.alpha0() == doctest::Approx(-0.125));
  const double ratio = swanson_wavefunction(m, 0, 2.0) / swanson_wavefunction(m, 0, 0.0);
  CHECK(std::log(ratio) / 4.0 == doctest::Approx(-0.1).epsilon(1e-13));
}

TEST_CASE("swanson wavefunctions solve the position-space equation") {
  for (double sigma : {0.75, 0.4, 1.0}) {
    const SwansonModel m(1.0, 0.6, sigma);
    const double big_omega2 = m.big_omega() * m.big_omega();
    for (int n = 0; n <= 6; ++n) {
      const auto psi = [&](double x) { return swanson_wavefunction(m, n, x); };
      const double e = swanson_energy(m, n);
      double peak = 0.0;
      double worst = 0.0;
      for (double x = -6.0; x <= 6.0; x += 0.05) {
        peak = std::max(peak, std::abs(psi(x)));
        const double h = 1e-2;
        const double lhs = -d2(psi, x, h) / (2 * m.mass()) + 0.5 * m.mass() * big_omega2 * x * x * psi(x) +
                           m.gauge() * (x * d1(psi, x, h) + 0.5 * psi(x));
        worst = std::max(worst, std::abs(lhs - e * psi(x)));
      }
      CHECK(worst <= 1e-6 * peak);
    }
  }
}

TEST_CASE("swanson alpha0 branch is negative") {
  for (int i = 1; i < 1000; ++i) {
    const double sigma = i / 1000.0;
    CHECK(SwansonModel(1.0, 0.5, sigma).alpha0() < 0.0);
  }
  // σ = 1 sits on the boundary Ω_r = 0, where the decaying factor is absent.
  CHECK(SwansonModel(1.0, 0.5, 1.0).alpha0() == 0.0);
}

TEST_CASE("swanson metric and Gram matrix") {
  const SwansonModel m(1, 1, 1);
  CHECK(swanson_metric_weight(m, 0.0) == 1.0);
  CHECK(swanson_metric_weight(SwansonModel(1, 0.6, 0.75), 1.0) == doctest::Approx(0.5488116).epsilon(1e-7));
  CHECK(swanson_metric_weight(SwansonModel(1, 0.0, 0.5), 3.0) == 1.0);

  const SwansonModel s(1.3, 0.6, 0.75);
  const auto gram = oracle::trapezoid_gram(
      6, [&](int n, double x) { return swanson_wavefunction(s, n, x); },
      [&](double x) { return swanson_metric_weight(s, x); }, -15.0, 15.0, 6001);
  CHECK(oracle::orthogonality_error(gram, std::vector<double>(6, 1.0)) <= 1e-6);
}

TEST_CASE("swanson high levels use log-space normalization") {
  const SwansonModel m(1, 0.6, 0.75);
  const double x = 1.3;
  // ψ_n of the Hermitian oscillator at frequency ω times e^{mΛx²/2}.
  for (int n : {20, 21, 25}) {
    const double s = std::sqrt(m.mass() * m.omega());
    const double log_norm = 0.25 * std::log(s * s / std::numbers::pi) - 0.5 * n * std::log(2.0) - 0.5 * std::lgamma(n + 1.0);
    const double expected = std::exp(log_norm + (m.sigma() - 1) * m.coupling() * x * x / (2 * m.sigma())) *
                            oracle::hermite_explicit(n, s * x).first;
    CHECK(swanson_wavefunction(m, n, x) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("isotonic energies") {
  const IsotonicModel a = IsotonicModel::from_eta(1, 3, 1);
  const double bracket = 0.5 + std::sqrt(10.0) / 4 - 0.6;
  CHECK(isotonic_energy(a, 0) == doctest::Approx(10.0 / 3.0 * bracket).epsilon(1e-14));
  CHECK(isotonic_energy(a, 0) == doctest::Approx(2.3018983).epsilon(1e-7));
  CHECK(isotonic_energy(IsotonicModel::from_eta(1, 0.75, 0), 0) == doctest::Approx(20.0 / 3.0).epsilon(1e-14));
  for (int n = 0; n < 8; ++n) {
    CHECK(isotonic_energy(a, n + 1) - isotonic_energy(a, n) == doctest::Approx(2 * std::sqrt(25.0) / 3).epsilon(1e-13));
  }
}

TEST_CASE("isotonic Hermitian limit agrees with the reduced formula") {
  for (double eta : {0.5, 0.75, 1.0, 3.0}) {
    for (double v0 : {1.0, 2.5}) {
      const IsotonicModel m = IsotonicModel::from_eta(v0, eta, 0.0);
      for (int n = 0; n < 6; ++n) {
        const double reduced = 8 * v0 / eta * (n + 0.5 + (std::sqrt(eta * eta + 1) - eta) / 4);
        CHECK(std::abs(isotonic_energy(m, n) - reduced) <= 1e-12 * reduced);
      }
    }
  }
}

TEST_CASE("isotonic parameters and level index") {
  const IsotonicModel m = IsotonicModel::from_eta(1, 3, 1);
  CHECK(m.alpha0() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(m.beta0() == doctest::Approx((std::sqrt(10.0) + 1) / 4).epsilon(1e-14));
  CHECK(m.eta() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(8 * m.mass() * m.v0() * m.x0() * m.x0() == doctest::Approx(9.0).epsilon(1e-14));
  for (int n = 0; n < 10; ++n) CHECK(isotonic_level_index(m, isotonic_energy(m, n)) == doctest::Approx(n).epsilon(1e-12).scale(1));
  const IsotonicModel other = IsotonicModel::from_eta(2.0, 1.4, 0.7, 1.5);
  for (int n = 0; n < 5; ++n)
    CHECK(isotonic_level_index(other, isotonic_energy(other, n)) == doctest::Approx(n).epsilon(1e-12).scale(1));
}

TEST_CASE("isotonic wavefunctions solve the position-space equation") {
  for (auto [eta, l0] : {std::pair{3.0, 1.0}, {0.75, 0.0}, {1.5, 0.4}}) {
    const IsotonicModel m = IsotonicModel::from_eta(1.0, eta, l0);
    for (int n = 0; n <= 6; ++n) {
      const auto psi = [&](double xi) { return isotonic_wavefunction_unnormalized(m, n, xi); };
      const double e = isotonic_energy(m, n) / m.v0();
      const double q = eta * eta / 4;
      double peak = 0.0;
      double worst = 0.0;
      for (double xi = 0.05; xi <= 8.0; xi += 0.01) {
        peak = std::max(peak, std::abs(psi(xi)));
        const double h = std::min(0.01, xi / 20);
        const double s = xi - 1 / xi;
        const double r = d2(psi, xi, h) - q * s * s * psi(xi) - l0 * q * xi * d1(psi, xi, h) + q * (e - l0 / 2) * psi(xi);
        worst = std::max(worst, std::abs(r));
      }
      CHECK(worst <= 1e-6 * peak);
    }
  }
}

TEST_CASE("isotonic wavefunction limits and metric") {
  const IsotonicModel m = IsotonicModel::from_eta(1, 3, 1);
  CHECK(std::abs(isotonic_wavefunction_unnormalized(m, 2, 1e-6)) < 1e-10);
  CHECK_THROWS_AS(isotonic_wavefunction_unnormalized(m, 0, 0.0), Error);
  CHECK_THROWS_AS(isotonic_wavefunction_unnormalized(m, 0, -1.0), Error);

  const IsotonicModel h = IsotonicModel::from_eta(1, 1.2, 0);
  const double a = std::sqrt(1.2 * 1.2 + 1) / 2;
  for (double xi : {0.3, 1.0, 2.2}) {
    const double reduced = std::exp(-1.2 * xi * xi / 4) * std::pow(xi, a + 0.5) * oracle::laguerre_explicit(3, a, 1.2 * xi * xi / 2).first;
    CHECK(isotonic_wavefunction_unnormalized(h, 3, xi) == doctest::Approx(reduced).epsilon(1e-12));
  }

  CHECK(isotonic_metric_weight(m, 1.0) == doctest::Approx(std::exp(-9.0 / 8)).epsilon(1e-14));
  CHECK(isotonic_metric_weight(m, 1.0) == doctest::Approx(0.3246525).epsilon(1e-7));
  CHECK(isotonic_metric_weight(h, 2.0) == 1.0);
  const double g = std::exp(-1.0 * 9 * 0.49 / 16);
  CHECK(isotonic_metric_weight(m, 0.7) == doctest::Approx(g * g).epsilon(1e-14));
}

TEST_CASE("isotonic states are metric-orthogonal") {
  const IsotonicModel m = IsotonicModel::from_eta(1, 3, 1);
  const auto gram = oracle::trapezoid_gram(
      6, [&](int n, double xi) { return xi > 0 ? isotonic_wavefunction_unnormalized(m, n, xi) : 0.0; },
      [&](double xi) { return xi > 0 ? isotonic_metric_weight(m, xi) : 0.0; }, 0.0, 14.0, 14001);
  std::vector<double> norms;
  for (int n = 0; n < 6; ++n) norms.push_back(gram(n, n));
  CHECK(oracle::orthogonality_error(gram, norms) <= 1e-6);
}

TEST_CASE("susy partner spectra and constant gauge") {
  CHECK(susy_partner_spectra(SusyKind::Harmonic, 1, 0).first == 1.0);
  CHECK(susy_partner_spectra(SusyKind::Harmonic, 1, 0).second == 0.0);
  CHECK(susy_partner_spectra(SusyKind::Harmonic, 2, 3).first == 8.0);
  CHECK(susy_partner_spectra(SusyKind::Harmonic, 2, 3).second == 6.0);
  CHECK(susy_partner_spectra(SusyKind::Isotonic, 1, 0).first == 3.0);
  CHECK(susy_partner_spectra(SusyKind::Isotonic, 1, 0).second == 3.0);
  CHECK(susy_partner_spectra(SusyKind::Isotonic, 0.5, 4).second == doctest::Approx(5.5));
  CHECK(constant_gauge_energy(1, 0) == 0.5);
  CHECK(constant_gauge_energy(1, 5) == 5.5);
  CHECK_THROWS_AS(constant_gauge_energy(-1, 0), Error);
}
