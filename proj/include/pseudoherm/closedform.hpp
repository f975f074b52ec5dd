#pragma once

#include <utility>

namespace pseudoherm {

/// Imaginary-gauge oscillator parametrized by mass, gauge strength Λ and the
/// ratio σ = Λ/ω. All derived quantities use ħ = 1.
class SwansonModel {
 public:
  /// Throws Domain unless m > 0, Λ >= 0, 0 < σ <= 1.
  SwansonModel(double mass, double gauge, double sigma);

  /// Builds the model from the physical oscillator frequency ω >= Λ.
  static SwansonModel from_frequency(double mass, double omega, double gauge);

  double mass() const { return mass_; }
  double gauge() const { return gauge_; }
  double sigma() const { return sigma_; }

  /// Ω_r = √(1/σ² − 1).
  double omega_r() const;
  /// ω = Λ/σ, the frequency of the Hermitian equivalent.
  double omega() const { return gauge_ / sigma_; }
  /// Ω = Ω_r Λ.
  double big_omega() const { return omega_r() * gauge_; }
  /// λ = mΛ, the coefficient of the gauge field A = −iλx.
  double coupling() const { return mass_ * gauge_; }
  /// Gaussian exponent of the ψ = e^{α₀u²}φ ansatz (decaying branch).
  double alpha0() const;

 private:
  double mass_;
  double gauge_;
  double sigma_;
};

/// Isotonic oscillator V₀(x/x₀ − x₀/x)² coupled to the gauge term Λ(x d/dx + ½).
class IsotonicModel {
 public:
  /// Throws Domain unless V₀, x₀, m > 0 and Λ >= 0.
  IsotonicModel(double v0, double x0, double mass, double gauge);

  /// Builds the model from the dimensionless pair (η, Λ₀ = Λ/V₀).
  static IsotonicModel from_eta(double v0, double eta, double gauge0, double mass = 1.0);

  double v0() const { return v0_; }
  double x0() const { return x0_; }
  double mass() const { return mass_; }
  double gauge() const { return gauge_; }
  /// η with η² = 8mV₀x₀².
  double eta() const;
  /// Λ₀ = Λ/V₀.
  double gauge0() const { return gauge_ / v0_; }
  /// √(η²Λ₀² + 16), recurring throughout the solution.
  double root() const;
  double alpha0() const;
  double beta0() const;
  /// Order a = √(η² + 1)/2 of the Laguerre polynomials.
  double laguerre_order() const;

 private:
  double v0_;
  double x0_;
  double mass_;
  double gauge_;
};

double swanson_energy(const SwansonModel& model, int n);

/// Metric-normalized eigenfunction ψ_n(x) of the non-Hermitian operator.
double swanson_wavefunction(const SwansonModel& model, int n, double x);

/// Θ(x) = e^{−mΛx²}.
double swanson_metric_weight(const SwansonModel& model, double x);

double isotonic_energy(const IsotonicModel& model, int n);

/// Inverse of isotonic_energy: the (real) level index n at energy E.
double isotonic_level_index(const IsotonicModel& model, double energy);

/// Unnormalized ψ_n(ξ), ξ = x/x₀ > 0.
double isotonic_wavefunction_unnormalized(const IsotonicModel& model, int n, double xi);

/// Θ(ξ) = e^{−Λ₀η²ξ²/8}.
double isotonic_metric_weight(const IsotonicModel& model, double xi);

enum class SusyKind { Harmonic, Isotonic };

struct PartnerLevels {
  double first;   // E_I,n
  double second;  // E_II,n
};

PartnerLevels susy_partner_spectra(SusyKind kind, double omega, int n);

/// ω(n + ½); independent of the constant gauge Δ.
double constant_gauge_energy(double omega, int n);

}  // namespace pseudoherm
