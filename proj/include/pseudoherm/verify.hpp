#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pseudoherm/eigensolve.hpp"
#include "pseudoherm/grid.hpp"

namespace pseudoherm {

/// One checked quantity. passed <=> value <= tolerance (and value finite).
struct CheckReport {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, double>> context;
};

CheckReport make_check(std::string name, double value, double tolerance,
                       std::vector<std::pair<std::string, double>> context = {});

/// Second-order decay band for ratio tests between a grid and its refinement.
inline constexpr double kRatioLow = 3.5;
inline constexpr double kRatioHigh = 4.5;

struct RatioTest {
  double coarse = 0.0;
  double fine = 0.0;
  double ratio = 0.0;
  /// Residuals at or below this level on both grids count as exact (roundoff only).
  double floor = 0.0;
  /// Lower edge of the accepted band; below kRatioLow only when the solution
  /// itself is not smooth enough for second order.
  double low = kRatioLow;

  bool exact() const { return coarse <= floor && fine <= floor; }
  bool second_order() const { return exact() || (ratio >= low && ratio <= kRatioHigh); }
  /// Report with value |ratio − band centre| against the band half-width
  /// (|ratio − 4| against 0.5 by default); value 0 when exact().
  CheckReport report(std::string name) const;
};

/// Evaluates `residual` on `coarse` and on coarse.refined().
RatioTest ratio_test(const std::function<double(const Grid&)>& residual, const Grid& coarse, double floor = 0.0);

/// The (n-1)/2-point grid with the same Dirichlet ends, so that coarse.refined() == fine.
/// Throws InvalidArgument for an even point count.
Grid coarse_partner(const Grid& fine);

/// Smooth test vector well inside the grid. On positive domains it vanishes
/// like x⁴ at the origin.
Vector probe_vector(const Grid& grid);

/// ‖(ΘH − HᵀΘ)φ‖ / ‖ΘHφ‖ on the probe φ; O(dx²) when ΘH = H†Θ holds in the
/// continuum.
double pseudo_hermiticity_residual(const BandedReal& h, const Vector& theta, const Grid& grid);

/// ‖ΘH − HᵀΘ‖_F / ‖ΘH‖_F over the band. Decays like dx³ for central stencils.
double pseudo_hermiticity_residual_frobenius(const BandedReal& h, const Vector& theta);

/// ‖(g H g⁻¹ − h)φ‖ / ‖hφ‖ on the probe φ, using the discretized H and h.
double gauge_conjugation_residual(const ModelSpec& spec, const Grid& grid);

/// G_mn = (ψ_m, Θ ψ_n) with trapezoid quadrature; columns are the ψ.
Matrix metric_gram(const Matrix& vectors, const Vector& theta, const Grid& grid);

/// max |G − I|.
double gram_deviation(const Matrix& gram);

struct LevelRecord {
  int n = 0;
  double e_closed = 0.0;
  double e_grid = 0.0;
  double rel_err = 0.0;
};

/// Closed-form energy of level n for the built-in models; Unsupported for custom.
double closed_form_energy(const ModelSpec& spec, int n);

/// Closed-form versus grid eigenvalues for n = 0..n_max. Throws Resolution when
/// E_{n_max} is not below a quarter of the kinetic ceiling 2/(m dx²).
std::vector<LevelRecord> closedform_vs_grid(const ModelSpec& spec, const Grid& grid, int n_max);

/// One check per level on the relative error.
std::vector<CheckReport> level_checks(const std::vector<LevelRecord>& levels, double tolerance);

/// Coefficient-level PT mismatch of −(1/2m)d² + U(x) + c(x)d/dx under
/// U(x) → U(−x), c(x) → −c(−x). Throws Unsupported for non-polynomial models.
CheckReport pt_symmetry_check(const ModelSpec& spec);

/// Factorization, intertwining and partner-spectrum checks.
/// levels <= 0 selects the defaults (6 harmonic, 5 isotonic).
std::vector<CheckReport> susy_checks(double omega, double lambda, SusyKind kind, const Grid& grid, int levels = 0);

/// Closed-form metric-normalized eigenfunction samples ψ_n(x_i) of the
/// non-Hermitian operator, for the built-in models.
Matrix closed_form_wavefunctions(const ModelSpec& spec, const Grid& grid, int count);

/// Largest |ψ_grid − ψ_closed| / |ψ_closed| over nodes where |ψ_closed|
/// exceeds `mask` times its maximum; columns are sign-aligned first.
double pointwise_relative_error(const Matrix& grid_vectors, const Matrix& closed, double mask = 1e-3);
/// Same mask and alignment, but deviations are divided by max|ψ_closed|.
double peak_relative_error(const Matrix& grid_vectors, const Matrix& closed, double mask = 1e-3);

/// Relative tolerance used for level checks of each built-in model.
double default_level_tolerance(const ModelSpec& spec);

/// Everything the library can check for one model on one grid.
std::vector<CheckReport> verification_suite(const ModelSpec& spec, const Grid& grid, int levels);

}  // namespace pseudoherm
