#include "pseudoherm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudoherm/closedform.hpp"
#include "pseudoherm/errors.hpp"

namespace pseudoherm {

namespace {
// Relative stencil residuals below this are floating-point noise.
constexpr double kRoundoffFloor = 1e-13;

// Isotonic states go like ξ^{2β₀} at the origin; for 2β₀ < 2 the asymptotic
// order of eigenvector errors drops to 2β₀, reached only on very fine grids.
double eigenvector_band_low(const ModelSpec& spec) {
  if (spec.kind() != ModelKind::Isotonic) return kRatioLow;
  const double order = std::min(2.0, 2.0 * spec.as<IsotonicModel>().beta0());
  return std::min(kRatioLow, std::pow(2.0, order) - 0.5);
}
}  // namespace

CheckReport make_check(std::string name, double value, double tolerance,
                       std::vector<std::pair<std::string, double>> context) {
  return CheckReport{std::move(name), value, tolerance, std::isfinite(value) && value <= tolerance,
                     std::move(context)};
}

CheckReport RatioTest::report(std::string name) const {
  if (exact()) {
    return make_check(std::move(name), 0.0, 0.5, {{"coarse", coarse}, {"fine", fine}, {"floor", floor}});
  }
  std::vector<std::pair<std::string, double>> context = {{"coarse", coarse}, {"fine", fine}, {"ratio", ratio}};
  if (low != kRatioLow) context.emplace_back("band_low", low);
  const double centre = 0.5 * (low + kRatioHigh);
  return make_check(std::move(name), std::abs(ratio - centre), 0.5 * (kRatioHigh - low), std::move(context));
}

RatioTest ratio_test(const std::function<double(const Grid&)>& residual, const Grid& coarse, double floor) {
  RatioTest t;
  t.floor = floor;
  t.coarse = residual(coarse);
  t.fine = residual(coarse.refined());
  t.ratio = t.coarse / t.fine;
  return t;
}

Grid coarse_partner(const Grid& fine) {
  if (fine.size() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "ratio tests need an odd point count");
  if (fine.size() < 7) throw Error(ErrorKind::InvalidArgument, "grid too small for a ratio test");
  return Grid::interior(fine.x_min() - fine.dx(), fine.x_max() + fine.dx(), (fine.size() - 1) / 2);
}

Vector probe_vector(const Grid& grid) {
  const Vector x = grid.nodes();
  Vector phi(x.size());
  if (grid.x_min() > 0.0) {
    const double s = grid.x_max() / 10.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double t = x(i) / s;
      phi(i) = t * t * t * t * std::exp(-t * t / 2.0);
    }
  } else {
    const double c = 0.5 * (grid.x_min() + grid.x_max());
    const double s = (grid.x_max() - grid.x_min()) / 20.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double t = (x(i) - c) / s;
      phi(i) = (1.0 + t) * std::exp(-t * t / 2.0);
    }
  }
  return phi;
}

double pseudo_hermiticity_residual(const BandedReal& h, const Vector& theta, const Grid& grid) {
  if ((theta.array() <= 0.0).any()) throw Error(ErrorKind::Domain, "metric weights must be strictly positive");
  const BandedReal left = h.scale_rows(theta);
  const BandedReal right = h.transpose().scale_cols(theta);
  const Vector phi = probe_vector(grid);
  return (left - right).apply(phi).norm() / left.apply(phi).norm();
}

double pseudo_hermiticity_residual_frobenius(const BandedReal& h, const Vector& theta) {
  const BandedReal left = h.scale_rows(theta);
  const BandedReal right = h.transpose().scale_cols(theta);
  return (left - right).frobenius_norm() / left.frobenius_norm();
}

double gauge_conjugation_residual(const ModelSpec& spec, const Grid& grid) {
  const Vector g = dyson_weights(spec, grid);
  const BandedReal conjugated = build_nonhermitian(spec, grid).scale_rows(g).scale_cols(g.cwiseInverse());
  const BandedReal hermitian = BandedReal::from(build_hermitian(spec, grid));
  const Vector phi = probe_vector(grid);
  return (conjugated - hermitian).apply(phi).norm() / hermitian.apply(phi).norm();
}

Matrix metric_gram(const Matrix& vectors, const Vector& theta, const Grid& grid) {
  const auto k = vectors.cols();
  Matrix gram(k, k);
  for (Eigen::Index m = 0; m < k; ++m) {
    for (Eigen::Index n = 0; n < k; ++n) {
      gram(m, n) = weighted_inner_product(vectors.col(m), vectors.col(n), theta, grid);
    }
  }
  return gram;
}

double gram_deviation(const Matrix& gram) {
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double closed_form_energy(const ModelSpec& spec, int n) {
  switch (spec.kind()) {
    case ModelKind::Swanson: return swanson_energy(spec.as<SwansonModel>(), n);
    case ModelKind::Isotonic: return isotonic_energy(spec.as<IsotonicModel>(), n);
    case ModelKind::ConstantGauge: return constant_gauge_energy(spec.as<ConstantGaugeModel>().omega, n);
    case ModelKind::Custom: break;
  }
  throw Error(ErrorKind::Unsupported, "custom models have no closed-form spectrum");
}

std::vector<LevelRecord> closedform_vs_grid(const ModelSpec& spec, const Grid& grid, int n_max) {
  if (n_max < 0 || n_max + 1 > grid.size()) throw Error(ErrorKind::InvalidArgument, "n_max out of range");
  const double ceiling = 2.0 / (spec.mass() * grid.dx() * grid.dx());
  const double top = closed_form_energy(spec, n_max);
  if (!(top < 0.25 * ceiling)) {
    throw Error(ErrorKind::Resolution, "level " + std::to_string(n_max) + " at E = " + std::to_string(top) +
                                           " is not resolved (ceiling " + std::to_string(ceiling) + ")");
  }
  const Vector values = tridiag_eigenvalues(build_hermitian(spec, grid));
  std::vector<LevelRecord> out;
  for (int n = 0; n <= n_max; ++n) {
    const double exact = closed_form_energy(spec, n);
    const double err = exact != 0.0 ? std::abs(values(n) - exact) / std::abs(exact) : std::abs(values(n));
    out.push_back({n, exact, values(n), err});
  }
  return out;
}

std::vector<CheckReport> level_checks(const std::vector<LevelRecord>& levels, double tolerance) {
  std::vector<CheckReport> out;
  for (const auto& l : levels) {
    out.push_back(make_check("level_" + std::to_string(l.n) + "_rel_err", l.rel_err, tolerance,
                             {{"n", l.n}, {"e_closed", l.e_closed}, {"e_grid", l.e_grid}}));
  }
  return out;
}

namespace {

struct OperatorPolys {
  Polynomial potential;
  Polynomial drift;
};

Polynomial add(Polynomial a, const Polynomial& b, double scale = 1.0) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += scale * b[k];
  return a;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Polynomial differentiate(const Polynomial& p) {
  Polynomial d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
  return d;
}

OperatorPolys operator_polys(const ModelSpec& spec) {
  switch (spec.kind()) {
    case ModelKind::Swanson: {
      const auto& m = spec.as<SwansonModel>();
      const double big = m.big_omega();
      return {{m.gauge() / 2.0, 0.0, m.mass() * big * big / 2.0}, {0.0, m.gauge()}};
    }
    case ModelKind::ConstantGauge: {
      const auto& m = spec.as<ConstantGaugeModel>();
      return {{-m.delta * m.delta / (2.0 * m.mass), 0.0, m.mass * m.omega * m.omega / 2.0}, {m.delta / m.mass}};
    }
    case ModelKind::Custom: {
      const auto& m = spec.as<CustomModel>();
      if (!m.potential_poly || !m.gauge_poly) {
        throw Error(ErrorKind::Unsupported, "PT check needs polynomial potential and gauge");
      }
      const Polynomial& a = *m.gauge_poly;
      Polynomial u = add(*m.potential_poly, multiply(a, a), -1.0 / (2.0 * m.mass));
      u = add(u, differentiate(a), 1.0 / (2.0 * m.mass));
      Polynomial c = add({}, a, 1.0 / m.mass);
      return {u, c};
    }
    case ModelKind::Isotonic: break;
  }
  throw Error(ErrorKind::Unsupported, "PT check is undefined for the half-line isotonic model");
}

}  // namespace

CheckReport pt_symmetry_check(const ModelSpec& spec) {
  const OperatorPolys polys = operator_polys(spec);
  double acc = 0.0;
  for (std::size_t k = 1; k < polys.potential.size(); k += 2) acc += 4.0 * polys.potential[k] * polys.potential[k];
  for (std::size_t k = 0; k < polys.drift.size(); k += 2) acc += 4.0 * polys.drift[k] * polys.drift[k];
  return make_check("pt_symmetry_mismatch", std::sqrt(acc), 1e-12);
}

std::vector<CheckReport> susy_checks(double omega, double lambda, SusyKind kind, const Grid& grid, int levels) {
  if (!(omega > 0.0)) throw Error(ErrorKind::Domain, "omega must be positive");
  if (!(lambda >= 0.0)) throw Error(ErrorKind::Domain, "lambda must be >= 0");
  if (kind == SusyKind::Isotonic && !(grid.x_min() > 0.0)) {
    throw Error(ErrorKind::Domain, "isotonic supercharges need a grid with x_min > 0");
  }
  if (levels <= 0) levels = kind == SusyKind::Harmonic ? 6 : 5;
  const double level_tol = kind == SusyKind::Harmonic ? 1e-4 : 1e-3;
  std::vector<CheckReport> out;

  auto factorization = [&](Partner which) {
    return [=](const Grid& g) {
      const BandedReal q1 = build_supercharge(kind, omega, lambda, g, Supercharge::Q1);
      const BandedReal q2 = build_supercharge(kind, omega, lambda, g, Supercharge::Q2);
      const BandedReal product = which == Partner::First ? q1 * q2 : q2 * q1;
      const BandedReal stencil = discretize(susy_partner_operator(kind, omega, lambda, g, which), g);
      const Vector phi = probe_vector(g);
      return (product - stencil).apply(phi).norm() / stencil.apply(phi).norm();
    };
  };
  const Grid coarse = grid.size() % 2 == 1 ? coarse_partner(grid) : grid;
  out.push_back(ratio_test(factorization(Partner::First), coarse).report("factorization_first_ratio"));
  out.push_back(ratio_test(factorization(Partner::Second), coarse).report("factorization_second_ratio"));

  const BandedReal q1 = build_supercharge(kind, omega, lambda, grid, Supercharge::Q1);
  const BandedReal q2 = build_supercharge(kind, omega, lambda, grid, Supercharge::Q2);
  const BandedReal first = q1 * q2;
  const BandedReal second = q2 * q1;
  const double q2_norm = q2.max_abs();
  const double intertwining = (q2 * first - second * q2).max_abs() / (q2_norm * q2_norm * q2_norm);
  out.push_back(make_check("intertwining_associativity", intertwining, 1e-12, {{"q2_max_abs", q2_norm}}));

  for (Partner which : {Partner::First, Partner::Second}) {
    const Vector values = tridiag_eigenvalues(build_susy_hermitian(kind, omega, grid, which));
    const std::string label = which == Partner::First ? "h_first" : "h_second";
    for (int n = 0; n < levels; ++n) {
      const PartnerLevels exact = susy_partner_spectra(kind, omega, n);
      const double target = which == Partner::First ? exact.first : exact.second;
      const double err = target != 0.0 ? std::abs(values(n) - target) / std::abs(target)
                                       : std::abs(values(n)) / omega;
      out.push_back(make_check(label + "_level_" + std::to_string(n), err, level_tol,
                               {{"n", n}, {"e_closed", target}, {"e_grid", values(n)}}));
    }
  }
  return out;
}

Matrix closed_form_wavefunctions(const ModelSpec& spec, const Grid& grid, int count) {
  const int n_points = grid.size();
  Matrix out(n_points, count);
  switch (spec.kind()) {
    case ModelKind::Swanson: {
      const auto& m = spec.as<SwansonModel>();
      for (int n = 0; n < count; ++n) {
        for (int i = 0; i < n_points; ++i) out(i, n) = swanson_wavefunction(m, n, grid.x(i));
      }
      return out;
    }
    case ModelKind::Isotonic: {
      const auto& m = spec.as<IsotonicModel>();
      const Vector theta = metric_weights(spec, grid);
      for (int n = 0; n < count; ++n) {
        Vector psi(n_points);
        for (int i = 0; i < n_points; ++i) psi(i) = isotonic_wavefunction_unnormalized(m, n, grid.x(i) / m.x0());
        out.col(n) = normalize_under_metric(psi, theta, grid);
      }
      return out;
    }
    case ModelKind::ConstantGauge: {
      const auto& m = spec.as<ConstantGaugeModel>();
      // σ = 1 makes the Swanson state a plain oscillator state times e^{mωx²/2};
      // the square root of its metric strips that factor again.
      const SwansonModel oscillator(m.mass, m.omega, 1.0);
      for (int n = 0; n < count; ++n) {
        for (int i = 0; i < n_points; ++i) {
          const double x = grid.x(i);
          out(i, n) = swanson_wavefunction(oscillator, n, x) * std::sqrt(swanson_metric_weight(oscillator, x)) *
                      std::exp(m.delta * x);
        }
      }
      return out;
    }
    case ModelKind::Custom: break;
  }
  throw Error(ErrorKind::Unsupported, "custom models have no closed-form wavefunctions");
}

namespace {

// Worst masked deviation; `local` divides by |ψ_closed(x_i)|, otherwise by max|ψ_closed|.
double masked_deviation(const Matrix& grid_vectors, const Matrix& closed, double mask, bool local) {
  if (grid_vectors.rows() != closed.rows() || grid_vectors.cols() != closed.cols()) {
    throw Error(ErrorKind::Length, "wavefunction tables differ in shape");
  }
  double worst = 0.0;
  for (Eigen::Index n = 0; n < closed.cols(); ++n) {
    const double peak = closed.col(n).cwiseAbs().maxCoeff();
    const double cutoff = mask * peak;
    double overlap = 0.0;
    for (Eigen::Index i = 0; i < closed.rows(); ++i) {
      if (std::abs(closed(i, n)) > cutoff) overlap += closed(i, n) * grid_vectors(i, n);
    }
    const double sign = overlap < 0.0 ? -1.0 : 1.0;
    for (Eigen::Index i = 0; i < closed.rows(); ++i) {
      if (std::abs(closed(i, n)) > cutoff) {
        const double scale = local ? std::abs(closed(i, n)) : peak;
        worst = std::max(worst, std::abs(sign * grid_vectors(i, n) - closed(i, n)) / scale);
      }
    }
  }
  return worst;
}

}  // namespace

double pointwise_relative_error(const Matrix& grid_vectors, const Matrix& closed, double mask) {
  return masked_deviation(grid_vectors, closed, mask, true);
}

double peak_relative_error(const Matrix& grid_vectors, const Matrix& closed, double mask) {
  return masked_deviation(grid_vectors, closed, mask, false);
}

double default_level_tolerance(const ModelSpec& spec) {
  return spec.kind() == ModelKind::Isotonic ? 1e-3 : 1e-4;
}

std::vector<CheckReport> verification_suite(const ModelSpec& spec, const Grid& grid, int levels) {
  if (levels < 1) throw Error(ErrorKind::InvalidArgument, "at least one level is required");
  std::vector<CheckReport> out;
  const bool closed = spec.kind() != ModelKind::Custom;
  if (closed) {
    const auto rows = level_checks(closedform_vs_grid(spec, grid, levels - 1), default_level_tolerance(spec));
    out.insert(out.end(), rows.begin(), rows.end());
  }

  const Grid coarse = grid.size() % 2 == 1 ? coarse_partner(grid) : grid;
  const auto pseudo_hermiticity = [&](const Grid& g) {
    return pseudo_hermiticity_residual(build_nonhermitian(spec, g), metric_weights(spec, g), g);
  };
  out.push_back(ratio_test(pseudo_hermiticity, coarse, kRoundoffFloor).report("pseudo_hermiticity_ratio"));
  out.push_back(make_check("pseudo_hermiticity_frobenius", pseudo_hermiticity_residual_frobenius(
                                                               build_nonhermitian(spec, grid), metric_weights(spec, grid)),
                           1e-6));
  const auto conjugation = [&](const Grid& g) { return gauge_conjugation_residual(spec, g); };
  out.push_back(ratio_test(conjugation, coarse, kRoundoffFloor).report("gauge_conjugation_ratio"));

  const Vector g = dyson_weights(spec, grid);
  const Vector theta = g.array().square();
  const EigenSet eigen = tridiag_eigen(build_hermitian(spec, grid), levels);
  const Matrix transported = transport_eigenvectors(eigen, g, grid);
  out.push_back(make_check("transported_gram_deviation", gram_deviation(metric_gram(transported, theta, grid)), 1e-6));
  out.push_back(make_check("hermitian_residual_max", eigen.residuals.maxCoeff(), 1e-8));

  const auto transported_residual = [&](const Grid& gg) {
    const EigenSet e = tridiag_eigen(build_hermitian(spec, gg), 1);
    const Vector weights = dyson_weights(spec, gg);
    const Matrix psi = transport_eigenvectors(e, weights, gg);
    const Vector th = weights.array().square();
    return nonhermitian_residuals(build_nonhermitian(spec, gg), psi, e.eigenvalues, th, gg)(0);
  };
  // Eigenvector residuals bottom out near the eigensolver's own accuracy.
  RatioTest transported_ratio = ratio_test(transported_residual, coarse, 1e-8);
  transported_ratio.low = eigenvector_band_low(spec);
  out.push_back(transported_ratio.report("nonhermitian_residual_ratio"));

  if (closed) {
    const int shown = std::min(levels, spec.kind() == ModelKind::Isotonic ? 4 : 6);
    const Matrix exact = closed_form_wavefunctions(spec, grid, shown);
    const double gram_tol = spec.kind() == ModelKind::Isotonic ? 1e-5 : 1e-6;
    out.push_back(make_check("closed_form_gram_deviation", gram_deviation(metric_gram(exact, theta, grid)), gram_tol));
    // Local relative error is erratic next to nodes of ψ, so the decay rate is
    // judged on the error relative to the peak.
    const int compared = std::min(shown, 5);
    const auto deviation = [&](const Grid& gg) {
      const EigenSet e = tridiag_eigen(build_hermitian(spec, gg), compared);
      const Matrix psi = transport_eigenvectors(e, dyson_weights(spec, gg), gg);
      return peak_relative_error(psi, closed_form_wavefunctions(spec, gg, compared));
    };
    RatioTest wave = ratio_test(deviation, coarse);
    wave.low = eigenvector_band_low(spec);
    out.push_back(wave.report("wavefunction_error_ratio"));
  }

  if (spec.kind() == ModelKind::ConstantGauge) {
    const auto& m = spec.as<ConstantGaugeModel>();
    const CheckReport pt = pt_symmetry_check(spec);
    const double expected = 2.0 * std::abs(m.delta) / m.mass;
    out.push_back(make_check("pt_mismatch_matches_gauge", std::abs(pt.value - expected), 1e-12,
                             {{"mismatch", pt.value}, {"expected", expected}}));
  } else if (spec.kind() == ModelKind::Swanson) {
    out.push_back(pt_symmetry_check(spec));
  }
  return out;
}

}  // namespace pseudoherm
