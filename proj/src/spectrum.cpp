#include "qtoda/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtoda/jacobi.hpp"

namespace qtoda {

namespace {

constexpr double kEigenResidualTol = 1e-9;
constexpr double kEnergyGapThreshold = 1e-8;

double sup_norm(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace

double energy(const SpectralPoint& xi, double q) {
  double s = 0.0;
  for (double x : xi.xi) s += std::cos(x);
  return 2.0 * (1.0 - q) * s;
}

EigenSystem build_eigensystem(const LatticeConfig& cfg, const ModelParams& params,
                              double tol) {
  EigenSystem es;
  es.cfg = cfg;
  es.params = params;
  es.lattice = enumerate_partitions(cfg);
  es.kappas = enumerate_partitions(conjugate_box(cfg));
  const std::size_t size = es.kappas.size();

  const LatticeOperator op = build_toda(cfg, params);
  es.eigenvectors.assign(size * size, 0.0);
  es.eigen_residuals.assign(size, 0.0);
  es.solutions.reserve(size);

  for (std::size_t r = 0; r < size; ++r) {
    MorseProblem prob(cfg, params, es.kappas[r]);
    BetheSolution sol = solve_bethe(prob, tol);
    const WaveFunction wf = wave_function(sol.xi, cfg, params);
    std::copy(wf.values.begin(), wf.values.end(), es.eigenvectors.begin() + r * size);

    const std::vector<double> hv = apply_operator(op, wf.values);
    double residual = 0.0;
    for (std::size_t c = 0; c < size; ++c) {
      residual = std::max(residual, std::abs(hv[c] - sol.energy * wf.values[c]));
    }
    residual /= sup_norm(wf.values);
    es.eigen_residuals[r] = residual;
    es.max_eigen_residual = std::max(es.max_eigen_residual, residual);
    if (residual > kEigenResidualTol) es.failing_kappas.push_back(static_cast<int>(r));
    es.solutions.push_back(std::move(sol));
  }

  // weighted Gram
  es.gram.assign(size * size, 0.0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r; c < size; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < size; ++k) {
        s += es.eigenvectors[r * size + k] * es.eigenvectors[c * size + k] *
             op.weight.values[k];
      }
      es.gram[r * size + c] = s;
      es.gram[c * size + r] = s;
    }
  }

  // singular values of the eigenvector matrix via the Jacobi solver on A A^T
  std::vector<double> aat(size * size, 0.0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r; c < size; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < size; ++k) {
        s += es.eigenvectors[r * size + k] * es.eigenvectors[c * size + k];
      }
      aat[r * size + c] = s;
      aat[c * size + r] = s;
    }
  }
  const std::vector<double> evals = jacobi_eigenvalues(std::move(aat), size);
  es.smallest_singular = std::sqrt(std::max(evals.front(), 0.0));
  es.largest_singular = std::sqrt(std::max(evals.back(), 0.0));
  es.condition_number =
      es.smallest_singular > 0.0 ? es.largest_singular / es.smallest_singular
                                 : std::numeric_limits<double>::infinity();
  return es;
}

std::vector<double> oracle_spectrum(const LatticeOperator& op) {
  return jacobi_eigenvalues(symmetrized(op), op.dim());
}

OrthogonalityReport orthogonality_report(const EigenSystem& es, const WeightTable& w) {
  const std::size_t size = es.dim();
  if (w.values.size() != es.lattice.size()) {
    throw std::invalid_argument("orthogonality_report: weight table dimension mismatch");
  }

  std::vector<double> gram(size * size, 0.0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r; c < size; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < size; ++k) {
        s += es.eigenvectors[r * size + k] * es.eigenvectors[c * size + k] * w.values[k];
      }
      gram[r * size + c] = s;
      gram[c * size + r] = s;
    }
  }

  OrthogonalityReport report;
  report.normalized.assign(size * size, 0.0);
  report.min_energy_gap = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      report.normalized[r * size + c] =
          gram[r * size + c] / std::sqrt(gram[r * size + r] * gram[c * size + c]);
    }
  }
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r + 1; c < size; ++c) {
      const double g = std::abs(report.normalized[r * size + c]);
      const double gap = std::abs(es.solutions[r].energy - es.solutions[c].energy);
      report.max_offdiag = std::max(report.max_offdiag, g);
      report.min_energy_gap = std::min(report.min_energy_gap, gap);
      if (gap > kEnergyGapThreshold) {
        report.max_offdiag_distinct = std::max(report.max_offdiag_distinct, g);
      } else {
        ++report.degenerate_pairs;
      }
    }
  }
  return report;
}

}  // namespace qtoda
