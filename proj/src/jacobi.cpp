#include "qtoda/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtoda {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) s += a[r * n + c] * a[r * n + c];
  }
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim) {
  if (a.size() != dim * dim) {
    throw std::invalid_argument("jacobi_eigenvalues: matrix size mismatch");
  }
  if (dim == 0) return {};

  const double scale = frobenius_norm(a);
  const double target = 1e-13 * scale;
  constexpr int kMaxSweeps = 100;

  if (scale == 0.0) return std::vector<double>(dim, 0.0);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, dim) <= target) break;
    if (sweep == kMaxSweeps - 1) {
      throw std::runtime_error("jacobi_eigenvalues: no convergence within sweep cap");
    }
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double apq = a[p * dim + q];
        if (apq == 0.0) continue;
        const double app = a[p * dim + p];
        const double aqq = a[q * dim + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e12) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * dim + p] = app - t * apq;
        a[q * dim + q] = aqq + t * apq;
        a[p * dim + q] = 0.0;
        a[q * dim + p] = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * dim + p];
          const double akq = a[k * dim + q];
          a[k * dim + p] = akp - s * (akq + tau * akp);
          a[k * dim + q] = akq + s * (akp - tau * akq);
          a[p * dim + k] = a[k * dim + p];
          a[q * dim + k] = a[k * dim + q];
        }
      }
    }
  }

  std::vector<double> evals(dim);
  for (std::size_t i = 0; i < dim; ++i) evals[i] = a[i * dim + i];
  std::sort(evals.begin(), evals.end());
  return evals;
}

}  // namespace qtoda
