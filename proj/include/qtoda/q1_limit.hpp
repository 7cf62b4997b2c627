#pragma once

#include <vector>

#include "qtoda/bethe.hpp"
#include "qtoda/hamiltonian.hpp"

namespace qtoda {

/// Roots 0 < theta_0 < ... < theta_n < pi of the Bernstein-Szego polynomial
/// (the q=0 member of the Askey-Wilson family) attached to the four boundary
/// parameters.
struct AskeyWilsonRoots {
  std::vector<double> thetas;
  ModelParams params;
};

/// Two-term Bernstein-Szego expression for the degree n+1 polynomial in
/// cos(theta), up to normalization; vanishes exactly at the thetas above.
double bs_polynomial(int n, double theta, const ModelParams& params);

/// Solves the decoupled logarithmic Bethe equation
/// 2 n theta + sum_a v_a(theta) = 2 pi (k+1), k = 0..n, by safeguarded
/// Newton on a strictly increasing function; roots interlace in (0, pi).
AskeyWilsonRoots aw_roots(int n, const ModelParams& params);

/// xi_kappa = (theta_{kappa_1}, ..., theta_{kappa_m}); the global minimum of
/// the decoupled Morse function.
SpectralPoint q1_bethe_solution(const Partition& kappa, const AskeyWilsonRoots& roots);

struct Q1Solution {
  Partition kappa;
  SpectralPoint xi;
  double energy = 0.0;          // 2 sum_j cos(xi_j)
  double grad_residual = 0.0;   // decoupled critical equation residual
  double eigen_residual = 0.0;  // |H~ psi - E psi|_inf / |psi|_inf
};

struct Q1Report {
  LatticeConfig cfg;
  ModelParams params;
  std::vector<double> thetas;
  double bs_residual_max = 0.0;
  bool roots_increasing = false;
  std::vector<Q1Solution> solutions;
  double max_eigen_residual = 0.0;
  double max_grad_residual = 0.0;
  double gram_max_offdiag = 0.0;       // unconditional
  double spectrum_max_diff = 0.0;      // vs the Jacobi oracle on H~
  double multinomial_norm_rel_err = 0.0;
  double m1_recurrence_residual = 0.0; // populated when m == 1
  double self_adjoint_residual = 0.0;
  double matrix_max_abs = 0.0;
  double condition_number = 0.0;
  bool passed = false;
};

/// Full q -> 1 pipeline: roots, factorized wave functions, eigenvalue
/// equation on H~, unconditional orthogonality in the multinomial weights,
/// spectrum comparison, and the closed-form normalization check.
Q1Report verify_q1_eigensystem(const LatticeConfig& cfg, const ModelParams& params,
                               double tol = 1e-9);

}  // namespace qtoda
