#pragma once

#include "pseudoherm/grid.hpp"

namespace pseudoherm {

/// Lowest eigenpairs of a symmetric tridiagonal matrix. Column j of
/// `eigenvectors` belongs to eigenvalues(j); columns have unit Euclidean norm
/// and their first significant component (|v_i| > 1e-6 max|v|) is positive.
struct EigenSet {
  Vector eigenvalues;
  Matrix eigenvectors;
  /// ‖T v − λ v‖₂ / ‖v‖₂ per pair.
  Vector residuals;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Matrices up to this dimension get full QL eigenvector accumulation; larger
/// ones use QL for the eigenvalues and inverse iteration for the k vectors.
inline constexpr int kDenseAccumulationLimit = 400;

/// Per-eigenvalue sweep budget of the implicit QL iteration.
inline constexpr int kQlSweepBudget = 60;

/// All eigenvalues (ascending) by implicit-shift QL. Throws Convergence.
Vector tridiag_eigenvalues(const SymTridiag& t);

/// k lowest eigenpairs, deterministic for fixed input. Throws Convergence,
/// or InvalidArgument when k is out of range.
EigenSet tridiag_eigen(const SymTridiag& t, int k);

/// Same, forcing full QL accumulation regardless of size.
EigenSet tridiag_eigen_dense(const SymTridiag& t, int k);

/// ψ_H = ψ_h / g, renormalized under the metric Θ = g². Throws Overflow.
Matrix transport_eigenvectors(const EigenSet& eigen, const Vector& dyson, const Grid& grid);

/// ‖H ψ − E ψ‖_Θ / ‖ψ‖_Θ for each transported column, in the metric norm.
Vector nonhermitian_residuals(const BandedReal& h, const Matrix& vectors, const Vector& eigenvalues,
                              const Vector& theta, const Grid& grid);

}  // namespace pseudoherm
