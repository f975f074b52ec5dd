#include "pseudoherm/closedform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pseudoherm/errors.hpp"
#include "pseudoherm/specfun.hpp"

namespace pseudoherm {

namespace {

void require_level(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "level index must be non-negative");
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::Domain, std::string(name) + " must be positive and finite");
  }
}

}  // namespace

SwansonModel::SwansonModel(double mass, double gauge, double sigma) : mass_(mass), gauge_(gauge), sigma_(sigma) {
  require_positive(mass, "mass");
  if (!(gauge >= 0.0) || !std::isfinite(gauge)) throw Error(ErrorKind::Domain, "gauge strength must be >= 0");
  if (!(sigma > 0.0 && sigma <= 1.0)) throw Error(ErrorKind::Domain, "sigma must lie in (0, 1]");
}

SwansonModel SwansonModel::from_frequency(double mass, double omega, double gauge) {
  require_positive(omega, "omega");
  if (gauge > omega) throw Error(ErrorKind::Domain, "gauge exceeds omega (Omega_r^2 < 0 regime)");
  return SwansonModel(mass, gauge, gauge / omega);
}

double SwansonModel::omega_r() const { return std::sqrt(1.0 / (sigma_ * sigma_) - 1.0); }

double SwansonModel::alpha0() const {
  const double wr = omega_r();
  return 0.5 * sigma_ * (1.0 - std::sqrt(1.0 + wr * wr));
}

IsotonicModel::IsotonicModel(double v0, double x0, double mass, double gauge)
    : v0_(v0), x0_(x0), mass_(mass), gauge_(gauge) {
  require_positive(v0, "V0");
  require_positive(x0, "x0");
  require_positive(mass, "mass");
  if (!(gauge >= 0.0) || !std::isfinite(gauge)) throw Error(ErrorKind::Domain, "gauge strength must be >= 0");
}

IsotonicModel IsotonicModel::from_eta(double v0, double eta, double gauge0, double mass) {
  require_positive(v0, "V0");
  require_positive(eta, "eta");
  require_positive(mass, "mass");
  return IsotonicModel(v0, eta / std::sqrt(8.0 * mass * v0), mass, gauge0 * v0);
}

double IsotonicModel::eta() const { return std::sqrt(8.0 * mass_ * v0_ * x0_ * x0_); }

double IsotonicModel::root() const {
  const double e = eta();
  const double l0 = gauge0();
  return std::sqrt(e * e * l0 * l0 + 16.0);
}

double IsotonicModel::alpha0() const { return (root() - eta() * gauge0()) / 8.0; }

double IsotonicModel::beta0() const {
  const double e = eta();
  return (std::sqrt(e * e + 1.0) + 1.0) / 4.0;
}

double IsotonicModel::laguerre_order() const {
  const double e = eta();
  return std::sqrt(e * e + 1.0) / 2.0;
}

double swanson_energy(const SwansonModel& model, int n) {
  require_level(n);
  return model.gauge() * (2.0 * n + 1.0) / (2.0 * model.sigma());
}

double swanson_wavefunction(const SwansonModel& model, int n, double x) {
  require_level(n);
  const double scale = model.mass() * model.gauge() / model.sigma();
  const double exponent = (model.sigma() - 1.0) * model.mass() * model.gauge() * x * x / (2.0 * model.sigma());
  const double poly = hermite(n, std::sqrt(scale) * x);
  if (n <= 20) {
    const double norm = std::pow(scale / std::numbers::pi, 0.25) /
                        (std::pow(2.0, 0.5 * n) * std::sqrt(std::exp(log_factorial(n))));
    return norm * std::exp(exponent) * poly;
  }
  const double log_norm =
      0.25 * std::log(scale / std::numbers::pi) - 0.5 * n * std::numbers::ln2 - 0.5 * log_factorial(n);
  return std::exp(log_norm + exponent) * poly;
}

double swanson_metric_weight(const SwansonModel& model, double x) {
  return std::exp(-model.mass() * model.gauge() * x * x);
}

double isotonic_energy(const IsotonicModel& model, int n) {
  require_level(n);
  const double e = model.eta();
  const double r = model.root();
  return (2.0 * model.v0() * r / e) * (n + 0.5 + std::sqrt(e * e + 1.0) / 4.0 - e / r);
}

double isotonic_level_index(const IsotonicModel& model, double energy) {
  const double e = model.eta();
  const double r = model.root();
  return 0.25 * (2.0 * (2.0 * model.v0() + energy) * e / (model.v0() * r) - std::sqrt(e * e + 1.0) - 2.0);
}

double isotonic_wavefunction_unnormalized(const IsotonicModel& model, int n, double xi) {
  require_level(n);
  if (!(xi > 0.0)) throw Error(ErrorKind::Domain, "isotonic wavefunction needs xi > 0");
  const double e = model.eta();
  const double r = model.root();
  const double gaussian = std::exp(-e * (r - e * model.gauge0()) * xi * xi / 16.0);
  const double power = std::pow(xi, 2.0 * model.beta0());
  return gaussian * power * laguerre(n, model.laguerre_order(), e * xi * xi * r / 8.0);
}

double isotonic_metric_weight(const IsotonicModel& model, double xi) {
  const double e = model.eta();
  return std::exp(-model.gauge0() * e * e * xi * xi / 8.0);
}

PartnerLevels susy_partner_spectra(SusyKind kind, double omega, int n) {
  require_level(n);
  require_positive(omega, "omega");
  if (kind == SusyKind::Harmonic) return {omega * (n + 1.0), omega * n};
  return {omega * (2.0 * n + 3.0), omega * (2.0 * n + 3.0)};
}

double constant_gauge_energy(double omega, int n) {
  require_level(n);
  require_positive(omega, "omega");
  return omega * (n + 0.5);
}

}  // namespace pseudoherm
