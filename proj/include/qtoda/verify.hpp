#pragma once

#include <string>
#include <vector>

#include "qtoda/q1_limit.hpp"
#include "qtoda/spectrum.hpp"

namespace qtoda {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
};

/// One full certification run at a fixed configuration: self-adjointness,
/// Bethe solvability with bounds, eigenvalue equation, spectrum comparison
/// against the Jacobi oracle, completeness, orthogonality, and the Hessian
/// convexity bound.
struct VerificationReport {
  LatticeConfig cfg;
  ModelParams params;
  EigenSystem eigensystem;
  OrthogonalityReport orthogonality;
  KBounds kb;

  double self_adjoint_residual = 0.0;
  double matrix_max_abs = 0.0;
  double spectrum_max_diff = 0.0;
  double max_grad_norm = 0.0;
  double max_bae_residual = 0.0;
  double min_hessian_eig = 0.0;
  double hessian_lower_bound = 0.0;
  double min_pairwise_xi_distance = 0.0;
  bool all_in_alcove = false;
  bool all_bounds_ok = false;
  bool orthogonality_unconditional = false;  // one of the four verified regimes
  std::vector<CheckResult> checks;
  bool passed = false;
};

VerificationReport run_verification(const LatticeConfig& cfg, const ModelParams& params,
                                    double tol = 1e-12);

}  // namespace qtoda
