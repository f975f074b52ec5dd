#pragma once

#include <cmath>

#include "pseudoherm/errors.hpp"

namespace pseudoherm {

/// Physicists' Hermite polynomial H_n(x), upward three-term recurrence.
template <typename Scalar>
Scalar hermite(int n, Scalar x) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "hermite: negative degree");
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar curr = Scalar(2) * x;
  for (int k = 1; k < n; ++k) {
    Scalar next = Scalar(2) * x * curr - Scalar(2 * k) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Associated Laguerre polynomial L_n^a(x), normalized so L_n^a(0) = C(n + a, n).
template <typename Scalar>
Scalar laguerre(int n, Scalar a, Scalar x) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "laguerre: negative degree");
  if (!(a > Scalar(-1))) throw Error(ErrorKind::Domain, "laguerre: order must exceed -1");
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar curr = Scalar(1) + a - x;
  for (int k = 1; k < n; ++k) {
    Scalar next = ((Scalar(2 * k + 1) + a - x) * curr - (Scalar(k) + a) * prev) / Scalar(k + 1);
    prev = curr;
    curr = next;
  }
  return curr;
}

/// ln(n!); exact product for n <= 20, log-gamma beyond.
inline double log_factorial(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "log_factorial: negative argument");
  if (n <= 20) {
    double product = 1.0;
    for (int k = 2; k <= n; ++k) product *= k;
    return std::log(product);
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace pseudoherm
