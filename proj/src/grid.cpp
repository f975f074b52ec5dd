#include "pseudoherm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudoherm/errors.hpp"

namespace pseudoherm {

Grid Grid::uniform(double x_min, double x_max, int n_points) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw Error(ErrorKind::Domain, "grid needs finite x_min < x_max");
  }
  if (n_points < 3) throw Error(ErrorKind::Domain, "grid needs at least 3 points");
  return Grid(x_min, x_max, n_points);
}

Grid Grid::interior(double a, double b, int n_points) {
  if (!(a < b)) throw Error(ErrorKind::Domain, "interior grid needs a < b");
  if (n_points < 3) throw Error(ErrorKind::Domain, "grid needs at least 3 points");
  const double h = (b - a) / (n_points + 1);
  return Grid(a + h, b - h, n_points);
}

Vector Grid::nodes() const {
  Vector x(n_points_);
  for (int i = 0; i < n_points_; ++i) x(i) = this->x(i);
  return x;
}

Grid Grid::refined() const { return interior(x_min_ - dx(), x_max_ + dx(), 2 * n_points_ + 1); }

Vector trapezoid_weights(const Grid& grid) {
  Vector w = Vector::Constant(grid.size(), grid.dx());
  w(0) *= 0.5;
  w(grid.size() - 1) *= 0.5;
  return w;
}

double evaluate(const Polynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
  return d;
}

void require_positive_domain(const Grid& grid, const char* what) {
  if (!(grid.x_min() > 0.0)) {
    throw Error(ErrorKind::Domain, std::string(what) + " is defined for x > 0 only; grid starts at " +
                                       std::to_string(grid.x_min()));
  }
}

double gauge_slope(const CustomModel& m, double x) {
  if (m.gauge_derivative) return m.gauge_derivative(x);
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  return (m.gauge(x + h) - m.gauge(x - h)) / (2.0 * h);
}

}  // namespace

CustomModel CustomModel::polynomial(double mass, Polynomial potential, Polynomial gauge) {
  CustomModel m;
  m.mass = mass;
  m.potential = [p = potential](double x) { return evaluate(p, x); };
  m.gauge = [p = gauge](double x) { return evaluate(p, x); };
  m.gauge_derivative = [p = derivative(gauge)](double x) { return evaluate(p, x); };
  m.potential_poly = std::move(potential);
  m.gauge_poly = std::move(gauge);
  return m;
}

ModelSpec::ModelSpec(ConstantGaugeModel m) : params_(m) {
  if (!(m.omega > 0.0)) throw Error(ErrorKind::Domain, "omega must be positive");
  if (!(m.mass > 0.0)) throw Error(ErrorKind::Domain, "mass must be positive");
  if (!std::isfinite(m.delta)) throw Error(ErrorKind::Domain, "delta must be finite");
}

ModelSpec::ModelSpec(CustomModel m) : params_(std::move(m)) {
  const auto& c = std::get<CustomModel>(params_);
  if (!c.potential || !c.gauge) throw Error(ErrorKind::InvalidArgument, "custom model needs potential and gauge");
  if (!(c.mass > 0.0)) throw Error(ErrorKind::Domain, "mass must be positive");
}

ModelKind ModelSpec::kind() const { return static_cast<ModelKind>(params_.index()); }

double ModelSpec::mass() const {
  return std::visit([](const auto& m) -> double {
    using T = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<T, SwansonModel> || std::is_same_v<T, IsotonicModel>) {
      return m.mass();
    } else {
      return m.mass;
    }
  }, params_);
}

Grid default_grid(const ModelSpec& spec, int n_points) {
  switch (spec.kind()) {
    case ModelKind::Swanson: {
      const auto& m = spec.as<SwansonModel>();
      if (!(m.gauge() > 0.0)) throw Error(ErrorKind::Domain, "default grid needs a positive gauge strength");
      const double half = 12.0 / std::sqrt(m.mass() * m.omega());
      return Grid::uniform(-half, half, n_points);
    }
    case ModelKind::ConstantGauge: {
      const auto& m = spec.as<ConstantGaugeModel>();
      const double half = 12.0 / std::sqrt(m.mass * m.omega);
      return Grid::uniform(-half, half, n_points);
    }
    case ModelKind::Isotonic: {
      const auto& m = spec.as<IsotonicModel>();
      const double right = 14.0 * m.x0();
      const double h = right / n_points;
      return Grid::uniform(h, right, n_points);
    }
    case ModelKind::Custom:
      break;
  }
  throw Error(ErrorKind::Unsupported, "custom models need an explicit grid");
}

namespace {

PositionOperator coefficients(const ModelSpec& spec, const Grid& grid, bool hermitian) {
  const int n = grid.size();
  PositionOperator op{spec.mass(), Vector::Zero(n), Vector::Zero(n)};
  switch (spec.kind()) {
    case ModelKind::Swanson: {
      const auto& m = spec.as<SwansonModel>();
      const double mass = m.mass();
      for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        if (hermitian) {
          const double w = m.omega();
          op.potential(i) = mass * w * w * x * x / 2.0;
        } else {
          const double big = m.big_omega();
          op.potential(i) = mass * big * big * x * x / 2.0 + m.gauge() / 2.0;
          op.drift(i) = m.gauge() * x;
        }
      }
      break;
    }
    case ModelKind::Isotonic: {
      require_positive_domain(grid, "isotonic model");
      const auto& m = spec.as<IsotonicModel>();
      const double eta = m.eta();
      const double l0 = m.gauge0();
      for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        const double xi = x / m.x0();
        const double base = m.v0() * (xi - 1.0 / xi) * (xi - 1.0 / xi);
        if (hermitian) {
          op.potential(i) = base + m.v0() * eta * eta * l0 * l0 * xi * xi / 16.0;
        } else {
          op.potential(i) = base + m.gauge() / 2.0;
          op.drift(i) = m.gauge() * x;
        }
      }
      break;
    }
    case ModelKind::ConstantGauge: {
      const auto& m = spec.as<ConstantGaugeModel>();
      for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        const double v = m.mass * m.omega * m.omega * x * x / 2.0;
        if (hermitian) {
          op.potential(i) = v;
        } else {
          op.potential(i) = v - m.delta * m.delta / (2.0 * m.mass);
          op.drift(i) = m.delta / m.mass;
        }
      }
      break;
    }
    case ModelKind::Custom: {
      const auto& m = spec.as<CustomModel>();
      for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        const double v = m.potential(x);
        if (hermitian) {
          op.potential(i) = v;
        } else {
          const double a = m.gauge(x);
          op.potential(i) = v - a * a / (2.0 * m.mass) + gauge_slope(m, x) / (2.0 * m.mass);
          op.drift(i) = a / m.mass;
        }
      }
      break;
    }
  }
  return op;
}

}  // namespace

PositionOperator nonhermitian_coefficients(const ModelSpec& spec, const Grid& grid) {
  return coefficients(spec, grid, false);
}

PositionOperator hermitian_coefficients(const ModelSpec& spec, const Grid& grid) {
  return coefficients(spec, grid, true);
}

BandedReal::BandedReal(int n, int half_bandwidth) : n_(n), b_(half_bandwidth), bands_(Matrix::Zero(2 * half_bandwidth + 1, n)) {
  if (n < 1 || half_bandwidth < 0) throw Error(ErrorKind::InvalidArgument, "bad banded matrix shape");
}

BandedReal BandedReal::tridiagonal(const Vector& sub, const Vector& main, const Vector& super) {
  const int n = static_cast<int>(main.size());
  if (sub.size() != n - 1 || super.size() != n - 1) throw Error(ErrorKind::Length, "band lengths do not match");
  BandedReal a(n, 1);
  for (int i = 0; i < n; ++i) {
    a.bands_(1, i) = main(i);
    if (i + 1 < n) {
      a.bands_(2, i) = super(i);
      a.bands_(0, i + 1) = sub(i);
    }
  }
  a.symmetric_ = sub == super;
  return a;
}

BandedReal BandedReal::from(const SymTridiag& t) {
  BandedReal a = tridiagonal(t.off_diagonal, t.diagonal, t.off_diagonal);
  a.symmetric_ = true;
  return a;
}

double BandedReal::operator()(int i, int j) const {
  const int off = j - i;
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || off < -b_ || off > b_) return 0.0;
  return bands_(off + b_, i);
}

void BandedReal::set(int i, int j, double value) {
  const int off = j - i;
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || off < -b_ || off > b_) {
    throw Error(ErrorKind::InvalidArgument, "entry outside band");
  }
  bands_(off + b_, i) = value;
}

Vector BandedReal::sub() const {
  Vector s(n_ - 1);
  for (int i = 0; i + 1 < n_; ++i) s(i) = (*this)(i + 1, i);
  return s;
}

Vector BandedReal::main() const { return bands_.row(b_).transpose(); }

Vector BandedReal::super() const {
  Vector s(n_ - 1);
  for (int i = 0; i + 1 < n_; ++i) s(i) = (*this)(i, i + 1);
  return s;
}

Vector BandedReal::apply(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorKind::Length, "vector length does not match matrix");
  Vector out = Vector::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    const int lo = std::max(-b_, -i);
    const int hi = std::min(b_, n_ - 1 - i);
    double acc = 0.0;
    for (int off = lo; off <= hi; ++off) acc += bands_(off + b_, i) * v(i + off);
    out(i) = acc;
  }
  return out;
}

BandedReal BandedReal::transpose() const {
  BandedReal t(n_, b_);
  for (int i = 0; i < n_; ++i) {
    for (int off = -b_; off <= b_; ++off) {
      const int j = i + off;
      if (j >= 0 && j < n_) t.bands_(-off + b_, j) = bands_(off + b_, i);
    }
  }
  t.symmetric_ = symmetric_;
  return t;
}

BandedReal BandedReal::scale_rows(const Vector& d) const {
  if (d.size() != n_) throw Error(ErrorKind::Length, "scaling vector length does not match matrix");
  BandedReal out = *this;
  for (int i = 0; i < n_; ++i) out.bands_.col(i) *= d(i);
  out.symmetric_ = false;
  return out;
}

BandedReal BandedReal::scale_cols(const Vector& d) const {
  if (d.size() != n_) throw Error(ErrorKind::Length, "scaling vector length does not match matrix");
  BandedReal out = *this;
  for (int i = 0; i < n_; ++i) {
    for (int off = -b_; off <= b_; ++off) {
      const int j = i + off;
      if (j >= 0 && j < n_) out.bands_(off + b_, i) *= d(j);
    }
  }
  out.symmetric_ = false;
  return out;
}

Matrix BandedReal::to_dense() const {
  Matrix m = Matrix::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int off = -b_; off <= b_; ++off) {
      const int j = i + off;
      if (j >= 0 && j < n_) m(i, j) = bands_(off + b_, i);
    }
  }
  return m;
}

double BandedReal::frobenius_norm() const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int off = -b_; off <= b_; ++off) {
      const int j = i + off;
      if (j >= 0 && j < n_) acc += bands_(off + b_, i) * bands_(off + b_, i);
    }
  }
  return std::sqrt(acc);
}

double BandedReal::max_abs() const { return bands_.cwiseAbs().maxCoeff(); }

BandedReal operator-(const BandedReal& a, const BandedReal& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Length, "matrix sizes differ");
  const int bw = std::max(a.b_, b.b_);
  BandedReal out(a.n_, bw);
  out.bands_.middleRows(bw - a.b_, 2 * a.b_ + 1) += a.bands_;
  out.bands_.middleRows(bw - b.b_, 2 * b.b_ + 1) -= b.bands_;
  out.symmetric_ = a.symmetric_ && b.symmetric_;
  return out;
}

BandedReal operator*(const BandedReal& a, const BandedReal& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Length, "matrix sizes differ");
  const int n = a.n_;
  BandedReal out(n, a.b_ + b.b_);
  for (int i = 0; i < n; ++i) {
    for (int p = -a.b_; p <= a.b_; ++p) {
      const int k = i + p;
      if (k < 0 || k >= n) continue;
      const double aik = a.bands_(p + a.b_, i);
      for (int q = -b.b_; q <= b.b_; ++q) {
        const int j = k + q;
        if (j < 0 || j >= n) continue;
        out.bands_(p + q + out.b_, i) += aik * b.bands_(q + b.b_, k);
      }
    }
  }
  return out;
}

BandedReal discretize(const PositionOperator& op, const Grid& grid) {
  const int n = grid.size();
  if (op.potential.size() != n || op.drift.size() != n) throw Error(ErrorKind::Length, "coefficients do not match grid");
  const double dx = grid.dx();
  const double kinetic_diag = 1.0 / (op.mass * dx * dx);
  const double kinetic_off = -1.0 / (2.0 * op.mass * dx * dx);
  Vector main(n), sub(n - 1), super(n - 1);
  for (int i = 0; i < n; ++i) main(i) = kinetic_diag + op.potential(i);
  for (int i = 0; i + 1 < n; ++i) {
    super(i) = kinetic_off + op.drift(i) / (2.0 * dx);
    sub(i) = kinetic_off - op.drift(i + 1) / (2.0 * dx);
  }
  BandedReal out = BandedReal::tridiagonal(sub, main, super);
  out.set_symmetric((op.drift.array() == 0.0).all());
  return out;
}

namespace {

SymTridiag symmetric_from(const PositionOperator& op, const Grid& grid) {
  const double dx = grid.dx();
  const double kinetic_diag = 1.0 / (op.mass * dx * dx);
  const double kinetic_off = -1.0 / (2.0 * op.mass * dx * dx);
  SymTridiag t;
  t.diagonal = Vector::Constant(grid.size(), kinetic_diag) + op.potential;
  t.off_diagonal = Vector::Constant(grid.size() - 1, kinetic_off);
  return t;
}

}  // namespace

SymTridiag build_hermitian(const ModelSpec& spec, const Grid& grid) {
  return symmetric_from(hermitian_coefficients(spec, grid), grid);
}

BandedReal build_nonhermitian(const ModelSpec& spec, const Grid& grid) {
  return discretize(nonhermitian_coefficients(spec, grid), grid);
}

Vector dyson_weights(const ModelSpec& spec, const Grid& grid) {
  const int n = grid.size();
  Vector log_g(n);
  switch (spec.kind()) {
    case ModelKind::Swanson: {
      const auto& m = spec.as<SwansonModel>();
      for (int i = 0; i < n; ++i) log_g(i) = -m.coupling() * grid.x(i) * grid.x(i) / 2.0;
      break;
    }
    case ModelKind::Isotonic: {
      require_positive_domain(grid, "isotonic model");
      const auto& m = spec.as<IsotonicModel>();
      const double eta = m.eta();
      for (int i = 0; i < n; ++i) {
        const double xi = grid.x(i) / m.x0();
        log_g(i) = -m.gauge0() * eta * eta * xi * xi / 16.0;
      }
      break;
    }
    case ModelKind::ConstantGauge: {
      const auto& m = spec.as<ConstantGaugeModel>();
      for (int i = 0; i < n; ++i) log_g(i) = -m.delta * grid.x(i);
      break;
    }
    case ModelKind::Custom: {
      // Cumulative trapezoid of a(x), anchored at x = 0 when it lies inside
      // the grid and at x_min otherwise.
      const auto& m = spec.as<CustomModel>();
      const double dx = grid.dx();
      Vector a(n);
      for (int i = 0; i < n; ++i) a(i) = m.gauge(grid.x(i));
      log_g(0) = 0.0;
      for (int i = 1; i < n; ++i) log_g(i) = log_g(i - 1) - 0.5 * dx * (a(i - 1) + a(i));
      if (grid.x_min() <= 0.0 && grid.x_max() >= 0.0) {
        const int k = std::min(n - 2, static_cast<int>(std::floor(-grid.x_min() / dx)));
        const double t = (0.0 - grid.x(k)) / dx;
        const double at_zero = log_g(k) + t * (log_g(k + 1) - log_g(k));
        log_g.array() -= at_zero;
      }
      break;
    }
  }
  Vector g = log_g.array().exp();
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(g(i)) || g(i) <= 0.0) {
      throw Error(ErrorKind::Overflow, "Dyson weight leaves double range at x = " + std::to_string(grid.x(i)) +
                                           "; shrink the domain");
    }
  }
  return g;
}

Vector metric_weights(const ModelSpec& spec, const Grid& grid) {
  const Vector g = dyson_weights(spec, grid);
  Vector theta = g.array().square();
  if (!theta.allFinite() || (theta.array() <= 0.0).any()) {
    throw Error(ErrorKind::Overflow, "metric weight leaves double range; shrink the domain");
  }
  return theta;
}

BandedReal build_supercharge(SusyKind kind, double omega, double lambda, const Grid& grid, Supercharge which) {
  if (!(omega > 0.0)) throw Error(ErrorKind::Domain, "omega must be positive");
  if (!(lambda >= 0.0)) throw Error(ErrorKind::Domain, "lambda must be >= 0");
  if (kind == SusyKind::Isotonic) require_positive_domain(grid, "isotonic superpotential");
  const int n = grid.size();
  const double s = 1.0 / std::sqrt(2.0);
  const double d = s / (2.0 * grid.dx());
  const double sign = which == Supercharge::Q1 ? 1.0 : -1.0;
  Vector main(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const double k = -lambda * x * s;
    const double w = kind == SusyKind::Harmonic ? omega * x * s : (omega * x + 1.0 / x) * s;
    main(i) = sign * k + w;
  }
  return BandedReal::tridiagonal(Vector::Constant(n - 1, -sign * d), main, Vector::Constant(n - 1, sign * d));
}

namespace {

double partner_shift(SusyKind kind, double omega, Partner which) {
  if (kind == SusyKind::Harmonic) return which == Partner::First ? omega / 2.0 : -omega / 2.0;
  return which == Partner::First ? 1.5 * omega : omega / 2.0;
}

}  // namespace

PositionOperator susy_partner_operator(SusyKind kind, double omega, double lambda, const Grid& grid,
                                       Partner which) {
  if (kind == SusyKind::Isotonic) require_positive_domain(grid, "isotonic partner");
  const int n = grid.size();
  PositionOperator op{1.0, Vector(n), Vector(n)};
  const double shift = partner_shift(kind, omega, which) + lambda / 2.0;
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    double u = (omega * omega - lambda * lambda) * x * x / 2.0 + shift;
    if (kind == SusyKind::Isotonic && which == Partner::Second) u += 1.0 / (x * x);
    op.potential(i) = u;
    op.drift(i) = lambda * x;
  }
  return op;
}

SymTridiag build_susy_hermitian(SusyKind kind, double omega, const Grid& grid, Partner which) {
  if (kind == SusyKind::Isotonic) require_positive_domain(grid, "isotonic partner");
  const int n = grid.size();
  PositionOperator op{1.0, Vector(n), Vector::Zero(n)};
  const double shift = partner_shift(kind, omega, which);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    double u = omega * omega * x * x / 2.0 + shift;
    if (kind == SusyKind::Isotonic && which == Partner::Second) u += 1.0 / (x * x);
    op.potential(i) = u;
  }
  return symmetric_from(op, grid);
}

double weighted_inner_product(const Vector& f, const Vector& h, const Vector& weight, const Grid& grid) {
  const auto n = grid.size();
  if (f.size() != n || h.size() != n || weight.size() != n) {
    throw Error(ErrorKind::Length, "inner product operands must match the grid");
  }
  return (trapezoid_weights(grid).array() * f.array() * weight.array() * h.array()).sum();
}

Vector normalize_under_metric(const Vector& f, const Vector& weight, const Grid& grid) {
  const double norm2 = weighted_inner_product(f, f, weight, grid);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw Error(ErrorKind::Overflow, "vector has no finite metric norm");
  return f / std::sqrt(norm2);
}

}  // namespace pseudoherm
