#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pseudoherm/closedform.hpp"

namespace pseudoherm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Boundary { Dirichlet };

/// Uniform lattice x_i = x_min + i dx, i = 0..n-1. Every node is an unknown;
/// the wavefunction is pinned to zero one spacing beyond each end.
class Grid {
 public:
  /// Throws Domain unless x_min < x_max and n_points >= 3.
  static Grid uniform(double x_min, double x_max, int n_points);
  /// Nodes strictly inside (a, b) with dx = (b - a)/(n + 1), so the
  /// Dirichlet zeros sit exactly on a and b.
  static Grid interior(double a, double b, int n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int size() const { return n_points_; }
  double dx() const { return (x_max_ - x_min_) / (n_points_ - 1); }
  double x(int i) const { return x_min_ + i * dx(); }
  Boundary boundary() const { return Boundary::Dirichlet; }
  Vector nodes() const;

  /// Same Dirichlet ends with 2n + 1 points (dx halved); the old nodes are
  /// the odd-indexed new ones.
  Grid refined() const;

 private:
  Grid(double x_min, double x_max, int n_points) : x_min_(x_min), x_max_(x_max), n_points_(n_points) {}

  double x_min_;
  double x_max_;
  int n_points_;
};

/// Trapezoid quadrature weights over the grid nodes.
Vector trapezoid_weights(const Grid& grid);

/// Polynomial coefficients c_0 + c_1 x + ... .
using Polynomial = std::vector<double>;

double evaluate(const Polynomial& p, double x);

/// Harmonic potential mω²x²/2 with a constant imaginary gauge field A = −iΔ.
struct ConstantGaugeModel {
  double omega = 1.0;
  double delta = 0.0;
  double mass = 1.0;
};

/// Arbitrary potential V(x) and imaginary gauge field A(x) = −i a(x).
struct CustomModel {
  double mass = 1.0;
  std::function<double(double)> potential;
  std::function<double(double)> gauge;
  /// a'(x); when empty a central difference of `gauge` is used.
  std::function<double(double)> gauge_derivative;
  /// Present when V and a are polynomials; enables the PT check.
  std::optional<Polynomial> potential_poly;
  std::optional<Polynomial> gauge_poly;

  static CustomModel polynomial(double mass, Polynomial potential, Polynomial gauge);
};

enum class ModelKind { Swanson, Isotonic, ConstantGauge, Custom };

class ModelSpec {
 public:
  using Params = std::variant<SwansonModel, IsotonicModel, ConstantGaugeModel, CustomModel>;

  ModelSpec(SwansonModel m) : params_(std::move(m)) {}
  ModelSpec(IsotonicModel m) : params_(std::move(m)) {}
  /// Throws Domain unless ω > 0 and m > 0.
  ModelSpec(ConstantGaugeModel m);
  /// Throws InvalidArgument when the potential or gauge callable is missing.
  ModelSpec(CustomModel m);

  ModelKind kind() const;
  double mass() const;
  const Params& params() const { return params_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(params_);
  }

 private:
  Params params_;
};

/// Harmonic-type models: [−L, L] with L = 12/√(mω). Isotonic: nodes
/// dx, 2dx, ..., 14x₀. Custom models have no natural domain and throw.
Grid default_grid(const ModelSpec& spec, int n_points = 4001);

/// Sampled coefficients of −(1/2m) d²/dx² + U(x) + c(x) d/dx.
struct PositionOperator {
  double mass = 1.0;
  Vector potential;
  Vector drift;
};

/// Non-Hermitian operator with the original potential and gauge drift.
PositionOperator nonhermitian_coefficients(const ModelSpec& spec, const Grid& grid);
/// Hermitian equivalent after the Dyson map (zero drift).
PositionOperator hermitian_coefficients(const ModelSpec& spec, const Grid& grid);

struct SymTridiag {
  Vector diagonal;
  Vector off_diagonal;

  int size() const { return static_cast<int>(diagonal.size()); }
};

/// Square banded matrix with equal lower and upper half-bandwidth. Band row
/// r holds the diagonal at offset r − b: bands(r, i) = A(i, i + r − b).
class BandedReal {
 public:
  BandedReal(int n, int half_bandwidth);

  /// Tridiagonal matrix from sub (A(i+1,i)), main and super (A(i,i+1)).
  static BandedReal tridiagonal(const Vector& sub, const Vector& main, const Vector& super);
  static BandedReal from(const SymTridiag& t);

  int size() const { return n_; }
  int half_bandwidth() const { return b_; }
  bool symmetric() const { return symmetric_; }
  void set_symmetric(bool s) { symmetric_ = s; }

  /// Zero outside the band.
  double operator()(int i, int j) const;
  void set(int i, int j, double value);

  Vector sub() const;
  Vector main() const;
  Vector super() const;
  const Matrix& bands() const { return bands_; }

  Vector apply(const Vector& v) const;
  BandedReal transpose() const;
  /// diag(d) * A
  BandedReal scale_rows(const Vector& d) const;
  /// A * diag(d)
  BandedReal scale_cols(const Vector& d) const;
  Matrix to_dense() const;

  double frobenius_norm() const;
  double max_abs() const;

  friend BandedReal operator-(const BandedReal& a, const BandedReal& b);
  friend BandedReal operator*(const BandedReal& a, const BandedReal& b);

 private:
  int n_;
  int b_;
  Matrix bands_;
  bool symmetric_ = false;
};

/// 3-point discretization of a PositionOperator.
BandedReal discretize(const PositionOperator& op, const Grid& grid);

SymTridiag build_hermitian(const ModelSpec& spec, const Grid& grid);
BandedReal build_nonhermitian(const ModelSpec& spec, const Grid& grid);

/// g(x_i) such that h = g H g⁻¹. Throws Overflow if any weight is zero or
/// non-finite on this grid.
Vector dyson_weights(const ModelSpec& spec, const Grid& grid);
/// Θ = g†g = g².
Vector metric_weights(const ModelSpec& spec, const Grid& grid);

enum class Supercharge { Q1, Q2 };

/// Q₁ = (1/√2) d/dx + K + W or Q₂ = −(1/√2) d/dx − K + W with K = −λx/√2,
/// W = ωx/√2 (harmonic) or (ωx + 1/x)/√2 (isotonic); m = 1.
BandedReal build_supercharge(SusyKind kind, double omega, double lambda, const Grid& grid, Supercharge which);

enum class Partner { First, Second };

/// Printed partner Hamiltonians H_I / H_II (non-Hermitian) as position operators.
PositionOperator susy_partner_operator(SusyKind kind, double omega, double lambda, const Grid& grid,
                                       Partner which);
/// Their Hermitian counterparts h_I / h_II.
SymTridiag build_susy_hermitian(SusyKind kind, double omega, const Grid& grid, Partner which);

/// Trapezoid value of ∫ f(x) w(x) h(x) dx. Throws Length on size mismatch.
double weighted_inner_product(const Vector& f, const Vector& h, const Vector& weight, const Grid& grid);

/// f / √(f, w f).
Vector normalize_under_metric(const Vector& f, const Vector& weight, const Grid& grid);

}  // namespace pseudoherm
