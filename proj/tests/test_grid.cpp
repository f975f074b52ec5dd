#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pseudoherm/closedform.hpp"
#include "pseudoherm/eigensolve.hpp"
#include "pseudoherm/errors.hpp"
#include "pseudoherm/grid.hpp"

using namespace pseudoherm;

namespace {

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Unsupported;
}

}  // namespace

TEST_CASE("grid geometry") {
  const Grid g = Grid::uniform(-2.0, 2.0, 5);
  CHECK(g.dx() == 1.0);
  CHECK(g.x(3) == 1.0);
  CHECK(g.nodes()(4) == 2.0);

  const Grid in = Grid::interior(0.0, 1.0, 3);
  CHECK(in.dx() == doctest::Approx(0.25));
  CHECK(in.x_min() == doctest::Approx(0.25));

  const Grid r = g.refined();
  CHECK(r.size() == 11);
  CHECK(r.dx() == doctest::Approx(0.5));
  for (int i = 0; i < g.size(); ++i) CHECK(r.x(2 * i + 1) == doctest::Approx(g.x(i)));

  CHECK(kind_of([] { Grid::uniform(1.0, 1.0, 5); }) == ErrorKind::Domain);
  CHECK(kind_of([] { Grid::uniform(0.0, 1.0, 2); }) == ErrorKind::Domain);
}

TEST_CASE("free particle matches the discrete Laplacian spectrum") {
  const int n = 200;
  const double m = 1.7;
  const Grid g = Grid::interior(0.0, std::numbers::pi, n);
  const ModelSpec spec = CustomModel::polynomial(m, {0.0}, {0.0});
  const Vector values = tridiag_eigenvalues(build_hermitian(spec, g));
  for (int k = 1; k <= n; k += 17) {
    const double expected = (1.0 - std::cos(k * std::numbers::pi / (n + 1))) / (m * g.dx() * g.dx());
    CHECK(values(k - 1) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("hermitian limit of the swanson model") {
  const Grid g = Grid::uniform(-12.0, 12.0, 2001);
  const Vector values = tridiag_eigenvalues(build_hermitian(SwansonModel(1.0, 1.0, 1.0), g));
  CHECK(values(0) == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("zero gauge gives bit-identical matrices") {
  const Grid g = Grid::uniform(-6.0, 6.0, 301);
  for (const ModelSpec& spec : {ModelSpec(SwansonModel(1.3, 0.0, 0.6)), ModelSpec(ConstantGaugeModel{1.2, 0.0, 0.8}),
                                ModelSpec(CustomModel::polynomial(1.0, {0.0, 0.3, 0.5, 0.0, 0.1}, {0.0}))}) {
    const BandedReal h = build_nonhermitian(spec, g);
    const BandedReal ref = BandedReal::from(build_hermitian(spec, g));
    CHECK(h.symmetric());
    CHECK((h.bands().array() == ref.bands().array()).all());
  }
  const Grid pos = Grid::uniform(0.01, 5.0, 300);
  const ModelSpec iso = IsotonicModel::from_eta(1.0, 2.0, 0.0);
  CHECK((build_nonhermitian(iso, pos).bands().array() == BandedReal::from(build_hermitian(iso, pos)).bands().array()).all());
}

TEST_CASE("swanson stencil entries") {
  const Grid g = Grid::uniform(-5.0, 5.0, 101);
  const SwansonModel m(1.0, 0.6, 0.75);
  const BandedReal h = build_nonhermitian(m, g);
  const double dx = g.dx();
  const double big_omega2 = 0.36 * 7.0 / 9.0;
  CHECK(big_omega2 == doctest::Approx(0.28));
  for (int i : {1, 37, 50, 99}) {
    const double x = g.x(i);
    CHECK(h(i, i) == doctest::Approx(1 / (dx * dx) + big_omega2 * x * x / 2 + 0.3).epsilon(1e-13));
    CHECK(h(i, i + 1) == doctest::Approx(-1 / (2 * dx * dx) + 0.6 * x / (2 * dx)).epsilon(1e-13));
    CHECK(h(i, i - 1) == doctest::Approx(-1 / (2 * dx * dx) - 0.6 * x / (2 * dx)).epsilon(1e-13));
  }
  CHECK_FALSE(h.symmetric());

  const SymTridiag t = build_hermitian(m, g);
  const double omega2 = 0.8 * 0.8;
  CHECK(t.diagonal(20) == doctest::Approx(1 / (dx * dx) + omega2 * g.x(20) * g.x(20) / 2).epsilon(1e-13));
  CHECK(t.off_diagonal(20) == doctest::Approx(-1 / (2 * dx * dx)).epsilon(1e-14));
}

TEST_CASE("constant gauge stencil entries") {
  const Grid g = Grid::uniform(-4.0, 4.0, 81);
  const BandedReal h = build_nonhermitian(ConstantGaugeModel{1.0, 0.5, 1.0}, g);
  const double dx = g.dx();
  for (int i : {3, 40, 77}) {
    const double x = g.x(i);
    CHECK(h(i, i) == doctest::Approx(1 / (dx * dx) + x * x / 2 - 0.125).epsilon(1e-13));
    CHECK(h(i, i + 1) == doctest::Approx(-1 / (2 * dx * dx) + 0.5 / (2 * dx)).epsilon(1e-13));
    CHECK(h(i, i - 1) == doctest::Approx(-1 / (2 * dx * dx) - 0.5 / (2 * dx)).epsilon(1e-13));
  }
}

TEST_CASE("isotonic potential and domain") {
  const IsotonicModel m = IsotonicModel::from_eta(1.0, 3.0, 1.0);
  const Grid g = Grid::uniform(0.5 * m.x0(), 1.5 * m.x0(), 3);
  const PositionOperator h = hermitian_coefficients(m, g);
  CHECK(h.potential(1) == doctest::Approx(0.5625).epsilon(1e-13));
  CHECK(h.drift.cwiseAbs().maxCoeff() == 0.0);
  const PositionOperator big = nonhermitian_coefficients(m, g);
  CHECK(big.potential(1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(big.drift(1) == doctest::Approx(m.gauge() * g.x(1)).epsilon(1e-13));

  const Grid bad = Grid::uniform(-1.0, 1.0, 11);
  CHECK(kind_of([&] { build_hermitian(m, bad); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { build_nonhermitian(m, Grid::uniform(0.0, 1.0, 11)); }) == ErrorKind::Domain);

  const Grid d = default_grid(m, 1000);
  CHECK(d.x_min() == doctest::Approx(d.dx()));
  CHECK(d.x_max() == doctest::Approx(14 * m.x0()));
}

TEST_CASE("default harmonic-type domain") {
  const Grid d = default_grid(SwansonModel(2.0, 0.6, 0.75), 401);
  CHECK(d.x_max() == doctest::Approx(12 / std::sqrt(2.0 * 0.8)));
  CHECK(d.x_min() == doctest::Approx(-d.x_max()));
  CHECK(kind_of([] { default_grid(CustomModel::polynomial(1, {0}, {0})); }) == ErrorKind::Unsupported);
}

TEST_CASE("dyson weights") {
  const Grid g = Grid::uniform(-2.0, 2.0, 5);
  CHECK(dyson_weights(SwansonModel(1.0, 0.6, 0.75), g)(3) == doctest::Approx(0.7408182).epsilon(1e-7));
  CHECK((dyson_weights(SwansonModel(1.0, 0.0, 0.75), g).array() == 1.0).all());
  CHECK(dyson_weights(ConstantGaugeModel{1.0, 0.5, 1.0}, g)(4) == doctest::Approx(0.3678794).epsilon(1e-7));
  const Vector theta = metric_weights(SwansonModel(1.0, 0.6, 0.75), g);
  CHECK(theta(3) == doctest::Approx(std::exp(-0.6)).epsilon(1e-14));

  // Custom gauge a(x) = 0.5 + 0.2x: g = exp(−(0.5x + 0.1x²)) anchored at x = 0.
  const Grid fine = Grid::uniform(-2.0, 2.0, 4001);
  const Vector w = dyson_weights(CustomModel::polynomial(1.0, {0.0, 0.0, 0.5}, {0.5, 0.2}), fine);
  for (int i : {0, 1000, 2000, 3500}) {
    const double x = fine.x(i);
    CHECK(w(i) == doctest::Approx(std::exp(-(0.5 * x + 0.1 * x * x))).epsilon(1e-9));
  }

  CHECK(kind_of([] { dyson_weights(ConstantGaugeModel{1.0, 50.0, 1.0}, Grid::uniform(-20, 20, 11)); }) ==
        ErrorKind::Overflow);
}

TEST_CASE("custom model potential includes the gauge terms") {
  const Grid g = Grid::uniform(-1.0, 1.0, 21);
  const CustomModel c = CustomModel::polynomial(2.0, {1.0, 0.0, 0.5}, {0.3, 0.4});
  const PositionOperator op = nonhermitian_coefficients(c, g);
  for (int i : {0, 7, 20}) {
    const double x = g.x(i);
    const double a = 0.3 + 0.4 * x;
    CHECK(op.potential(i) == doctest::Approx(1.0 + 0.5 * x * x - a * a / 4.0 + 0.4 / 4.0).epsilon(1e-12));
    CHECK(op.drift(i) == doctest::Approx(a / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("supercharge stencils") {
  const Grid g = Grid::uniform(-3.0, 3.0, 61);
  const BandedReal q1 = build_supercharge(SusyKind::Harmonic, 1.0, 0.0, g, Supercharge::Q1);
  const BandedReal q2 = build_supercharge(SusyKind::Harmonic, 1.0, 0.0, g, Supercharge::Q2);
  CHECK((q1.transpose().to_dense() - q2.to_dense()).cwiseAbs().maxCoeff() <= 1e-15);

  const BandedReal q = build_supercharge(SusyKind::Harmonic, 1.0, 0.5, g, Supercharge::Q1);
  for (int i : {5, 30, 55}) CHECK(q(i, i) == doctest::Approx(0.5 * g.x(i) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(q(10, 11) == doctest::Approx(1.0 / (std::sqrt(2.0) * 2 * g.dx())));

  const Grid pos = Grid::uniform(0.1, 3.0, 30);
  const BandedReal qi = build_supercharge(SusyKind::Isotonic, 1.0, 0.0, pos, Supercharge::Q1);
  for (int i : {0, 12}) {
    const double x = pos.x(i);
    CHECK(qi(i, i) == doctest::Approx((x + 1 / x) / std::sqrt(2.0)).epsilon(1e-14));
  }
  CHECK(kind_of([&] { build_supercharge(SusyKind::Isotonic, 1.0, 0.0, g, Supercharge::Q1); }) == ErrorKind::Domain);
}

TEST_CASE("banded algebra agrees with dense products") {
  const Grid g = Grid::uniform(-1.0, 1.0, 9);
  const BandedReal a = build_nonhermitian(SwansonModel(1.0, 0.6, 0.75), g);
  const BandedReal b = build_supercharge(SusyKind::Harmonic, 1.0, 0.3, g, Supercharge::Q2);
  const Matrix dense = a.to_dense() * b.to_dense();
  CHECK(((a * b).to_dense() - dense).cwiseAbs().maxCoeff() <= 1e-12 * dense.cwiseAbs().maxCoeff());
  CHECK(((a - a).max_abs()) == 0.0);
  Vector v = Vector::LinSpaced(9, -1.0, 2.0);
  CHECK((a.apply(v) - a.to_dense() * v).norm() <= 1e-12 * (a.to_dense() * v).norm());
  CHECK((a.scale_rows(v).to_dense() - v.asDiagonal() * a.to_dense()).norm() <= 1e-12 * a.frobenius_norm());
  CHECK((a.scale_cols(v).to_dense() - a.to_dense() * v.asDiagonal()).norm() <= 1e-12 * a.frobenius_norm());
}

TEST_CASE("weighted inner products") {
  const Grid unit = Grid::uniform(0.0, 1.0, 11);
  const Vector one = Vector::Ones(11);
  CHECK(weighted_inner_product(one, one, one, unit) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(kind_of([&] { weighted_inner_product(one, Vector::Ones(10), one, unit); }) == ErrorKind::Length);

  const Grid g = Grid::uniform(-10.0, 10.0, 4001);
  const SwansonModel plain(1.0, 1.0, 1.0);
  Vector psi0(g.size());
  for (int i = 0; i < g.size(); ++i) psi0(i) = oracle::oscillator_state(0, 1.0, 1.0, g.x(i));
  CHECK(weighted_inner_product(psi0, psi0, Vector::Ones(g.size()), g) == doctest::Approx(1.0).epsilon(1e-8));

  const SwansonModel s(1.0, 0.6, 0.75);
  Vector a(g.size()), b(g.size()), theta(g.size());
  for (int i = 0; i < g.size(); ++i) {
    a(i) = swanson_wavefunction(s, 0, g.x(i));
    b(i) = swanson_wavefunction(s, 1, g.x(i));
    theta(i) = swanson_metric_weight(s, g.x(i));
  }
  CHECK(std::abs(weighted_inner_product(a, b, theta, g)) <= 1e-8);
  const Vector n = normalize_under_metric(3.0 * a, theta, g);
  CHECK(weighted_inner_product(n, n, theta, g) == doctest::Approx(1.0).epsilon(1e-13));
}
