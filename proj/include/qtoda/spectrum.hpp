#pragma once

#include <vector>

#include "qtoda/bethe.hpp"
#include "qtoda/hamiltonian.hpp"

namespace qtoda {

/// E(xi) = 2 (1-q) sum_j cos(xi_j).
double energy(const SpectralPoint& xi, double q);

/// The complete Bethe eigensystem: one solution per kappa in Lambda^(m,n),
/// the tabulated wave functions (rows = kappa, columns = mu), the weighted
/// Gram matrix, and completeness diagnostics.
struct EigenSystem {
  LatticeConfig cfg;
  ModelParams params;
  std::vector<Partition> lattice;        // Lambda^(n,m), enumeration order
  std::vector<Partition> kappas;         // Lambda^(m,n), enumeration order
  std::vector<BetheSolution> solutions;  // aligned with kappas
  std::vector<double> eigenvectors;      // N x N row-major, [kappa][mu]
  std::vector<double> gram;              // N x N weighted Gram
  std::vector<double> eigen_residuals;   // |H psi - E psi|_inf / |psi|_inf
  double max_eigen_residual = 0.0;
  std::vector<int> failing_kappas;       // residual above threshold
  double smallest_singular = 0.0;
  double largest_singular = 0.0;
  double condition_number = 0.0;

  std::size_t dim() const { return kappas.size(); }
};

/// Solves the Bethe equations for every kappa (Newton tolerance `tol`),
/// tabulates the wave functions, checks the eigenvalue equation against the
/// 1e-9 relative threshold, and reports the conditioning of the eigenvector
/// matrix.
EigenSystem build_eigensystem(const LatticeConfig& cfg, const ModelParams& params,
                              double tol = 1e-12);

/// Independent spectrum of the weighted-self-adjoint operator: eigenvalues
/// of S = D^{1/2} M D^{-1/2} through the in-house Jacobi solver, ascending.
std::vector<double> oracle_spectrum(const LatticeOperator& op);

struct OrthogonalityReport {
  std::vector<double> normalized;    // N x N, unit diagonal
  double max_offdiag = 0.0;          // over all pairs
  double max_offdiag_distinct = 0.0; // over pairs with |E_k - E_v| > gap threshold
  double min_energy_gap = 0.0;
  int degenerate_pairs = 0;          // pairs with |E_k - E_v| <= gap threshold
};

/// Normalized off-diagonal inner products <psi_k, psi_v> / (|psi_k| |psi_v|)
/// in the given weights; pairs with energy gap below 1e-8 are flagged.
OrthogonalityReport orthogonality_report(const EigenSystem& es, const WeightTable& w);

}  // namespace qtoda
