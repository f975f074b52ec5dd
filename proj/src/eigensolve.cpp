#include "pseudoherm/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "pseudoherm/errors.hpp"

namespace pseudoherm {

namespace {

// Implicit QL with Wilkinson-type shifts. d holds the diagonal, e[i] couples
// rows i and i+1 (e[n-1] is scratch). When z is given, rotations are
// accumulated into its columns.
void implicit_ql(Vector& d, Vector& e, Matrix* z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d(m)) + std::abs(d(m + 1));
        if (std::abs(e(m)) + dd == dd) break;
      }
      if (m == l) break;
      if (iter++ == kQlSweepBudget) {
        throw Error(ErrorKind::Convergence, "QL iteration did not settle eigenvalue " + std::to_string(l));
      }
      double g = (d(l + 1) - d(l)) / (2.0 * e(l));
      double r = std::hypot(g, 1.0);
      g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * e(i);
        const double b = c * e(i);
        r = std::hypot(f, g);
        e(i + 1) = r;
        if (r == 0.0) {
          d(i + 1) -= p;
          e(m) = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + 2.0 * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
        if (z != nullptr) {
          auto zi = z->col(i);
          auto zi1 = z->col(i + 1);
          for (Eigen::Index k = 0; k < z->rows(); ++k) {
            const double t = zi1(k);
            zi1(k) = s * zi(k) + c * t;
            zi(k) = c * zi(k) - s * t;
          }
        }
      }
      if (underflow) continue;
      d(l) -= p;
      e(l) = g;
      e(m) = 0.0;
    } while (m != l);
  }
}

std::vector<int> ascending_order(const Vector& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values(a) < values(b); });
  return order;
}

void fix_sign(Eigen::Ref<Vector> v) {
  const double threshold = 1e-6 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > threshold) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

Vector tridiag_apply(const SymTridiag& t, const Vector& v) {
  const int n = t.size();
  Vector out = t.diagonal.cwiseProduct(v);
  if (n > 1) {
    out.head(n - 1) += t.off_diagonal.cwiseProduct(v.tail(n - 1));
    out.tail(n - 1) += t.off_diagonal.cwiseProduct(v.head(n - 1));
  }
  return out;
}

double tridiag_norm1(const SymTridiag& t) {
  const int n = t.size();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(t.diagonal(i));
    if (i > 0) row += std::abs(t.off_diagonal(i - 1));
    if (i + 1 < n) row += std::abs(t.off_diagonal(i));
    best = std::max(best, row);
  }
  return best;
}

// LU factorization with partial pivoting of T − shift·I, kept in the
// dgttrf layout (unit-lower multipliers, upper with two superdiagonals).
class ShiftedTridiagLU {
 public:
  ShiftedTridiagLU(const SymTridiag& t, double shift, double tiny)
      : n_(t.size()), dl_(t.off_diagonal), d_(t.diagonal.array() - shift), du_(t.off_diagonal),
        du2_(Vector::Zero(std::max(0, n_ - 2))), swapped_(n_, false) {
    for (int i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_(i)) >= std::abs(dl_(i))) {
        if (std::abs(d_(i)) < tiny) d_(i) = std::copysign(tiny, d_(i));
        const double fact = dl_(i) / d_(i);
        dl_(i) = fact;
        d_(i + 1) -= fact * du_(i);
      } else {
        swapped_[i] = true;
        const double fact = d_(i) / dl_(i);
        d_(i) = dl_(i);
        dl_(i) = fact;
        const double temp = du_(i);
        du_(i) = d_(i + 1);
        d_(i + 1) = temp - fact * d_(i + 1);
        if (i + 2 < n_) {
          du2_(i) = du_(i + 1);
          du_(i + 1) = -fact * du_(i + 1);
        }
      }
    }
    if (std::abs(d_(n_ - 1)) < tiny) d_(n_ - 1) = std::copysign(tiny, d_(n_ - 1));
  }

  void solve_in_place(Vector& b) const {
    for (int i = 0; i + 1 < n_; ++i) {
      if (!swapped_[i]) {
        b(i + 1) -= dl_(i) * b(i);
      } else {
        const double temp = b(i);
        b(i) = b(i + 1);
        b(i + 1) = temp - dl_(i) * b(i);
      }
    }
    b(n_ - 1) /= d_(n_ - 1);
    if (n_ > 1) b(n_ - 2) = (b(n_ - 2) - du_(n_ - 2) * b(n_ - 1)) / d_(n_ - 2);
    for (int i = n_ - 3; i >= 0; --i) b(i) = (b(i) - du_(i) * b(i + 1) - du2_(i) * b(i + 2)) / d_(i);
  }

 private:
  int n_;
  Vector dl_;
  Vector d_;
  Vector du_;
  Vector du2_;
  std::vector<bool> swapped_;
};

Vector start_vector(int n, int index) {
  std::minstd_rand rng(7919u + static_cast<unsigned>(index));
  Vector v(n);
  const double scale = 1.0 / static_cast<double>(std::minstd_rand::max());
  for (int i = 0; i < n; ++i) v(i) = static_cast<double>(rng()) * scale - 0.5;
  return v;
}

Matrix inverse_iteration(const SymTridiag& t, const Vector& eigenvalues) {
  const int n = t.size();
  const int k = static_cast<int>(eigenvalues.size());
  const double norm = std::max(tridiag_norm1(t), std::numeric_limits<double>::min());
  const double tiny = std::numeric_limits<double>::epsilon() * norm;
  const double cluster = 1e-3 * norm;
  Matrix vectors(n, k);
  for (int j = 0; j < k; ++j) {
    const ShiftedTridiagLU lu(t, eigenvalues(j), tiny);
    Vector v = start_vector(n, j);
    v.normalize();
    for (int sweep = 0; sweep < 4; ++sweep) {
      lu.solve_in_place(v);
      for (int prev = 0; prev < j; ++prev) {
        if (std::abs(eigenvalues(j) - eigenvalues(prev)) <= cluster) v -= vectors.col(prev).dot(v) * vectors.col(prev);
      }
      v.normalize();
    }
    vectors.col(j) = v;
  }
  return vectors;
}

void require_count(const SymTridiag& t, int k) {
  if (t.off_diagonal.size() + 1 != t.diagonal.size()) throw Error(ErrorKind::Length, "off-diagonal length must be n-1");
  if (k < 1 || k > t.size()) throw Error(ErrorKind::InvalidArgument, "requested eigenpair count out of range");
}

EigenSet finish(const SymTridiag& t, Vector eigenvalues, Matrix vectors) {
  EigenSet out{std::move(eigenvalues), std::move(vectors), Vector(0)};
  out.residuals.resize(out.size());
  for (int j = 0; j < out.size(); ++j) {
    fix_sign(out.eigenvectors.col(j));
    const Vector v = out.eigenvectors.col(j);
    out.residuals(j) = (tridiag_apply(t, v) - out.eigenvalues(j) * v).norm() / v.norm();
  }
  return out;
}

Vector padded_off_diagonal(const SymTridiag& t) {
  Vector e = Vector::Zero(t.size());
  e.head(t.size() - 1) = t.off_diagonal;
  return e;
}

}  // namespace

Vector tridiag_eigenvalues(const SymTridiag& t) {
  require_count(t, 1);
  Vector d = t.diagonal;
  Vector e = padded_off_diagonal(t);
  implicit_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

EigenSet tridiag_eigen_dense(const SymTridiag& t, int k) {
  require_count(t, k);
  const int n = t.size();
  Vector d = t.diagonal;
  Vector e = padded_off_diagonal(t);
  Matrix z = Matrix::Identity(n, n);
  implicit_ql(d, e, &z);
  const auto order = ascending_order(d);
  Vector values(k);
  Matrix vectors(n, k);
  for (int j = 0; j < k; ++j) {
    values(j) = d(order[j]);
    vectors.col(j) = z.col(order[j]);
  }
  return finish(t, std::move(values), std::move(vectors));
}

EigenSet tridiag_eigen(const SymTridiag& t, int k) {
  require_count(t, k);
  if (t.size() <= kDenseAccumulationLimit) return tridiag_eigen_dense(t, k);
  Vector values = tridiag_eigenvalues(t).head(k);
  Matrix vectors = inverse_iteration(t, values);
  return finish(t, std::move(values), std::move(vectors));
}

Matrix transport_eigenvectors(const EigenSet& eigen, const Vector& dyson, const Grid& grid) {
  const auto n = eigen.eigenvectors.rows();
  if (dyson.size() != n || grid.size() != n) throw Error(ErrorKind::Length, "weights do not match eigenvectors");
  if ((dyson.array() <= 0.0).any()) throw Error(ErrorKind::Domain, "Dyson weights must be strictly positive");
  const Vector theta = dyson.array().square();
  Matrix out(n, eigen.size());
  for (int j = 0; j < eigen.size(); ++j) {
    Vector psi = eigen.eigenvectors.col(j).array() / dyson.array();
    if (!psi.allFinite()) throw Error(ErrorKind::Overflow, "transported eigenvector is not finite; shrink the domain");
    out.col(j) = normalize_under_metric(psi, theta, grid);
  }
  return out;
}

Vector nonhermitian_residuals(const BandedReal& h, const Matrix& vectors, const Vector& eigenvalues,
                              const Vector& theta, const Grid& grid) {
  if (vectors.cols() != eigenvalues.size()) throw Error(ErrorKind::Length, "one eigenvalue per vector required");
  Vector out(vectors.cols());
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const Vector psi = vectors.col(j);
    const Vector r = h.apply(psi) - eigenvalues(j) * psi;
    out(j) = std::sqrt(weighted_inner_product(r, r, theta, grid) / weighted_inner_product(psi, psi, theta, grid));
  }
  return out;
}

}  // namespace pseudoherm
