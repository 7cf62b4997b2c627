#pragma once

#include <vector>

#include "qtoda/hall_littlewood.hpp"
#include "qtoda/lattice.hpp"
#include "qtoda/measures.hpp"

namespace qtoda {

/// Data of one Morse-function minimization: chain box, parameters, and the
/// quantum numbers kappa in Lambda^(m,n).
struct MorseProblem {
  LatticeConfig cfg;
  ModelParams params;
  Partition kappa;

  MorseProblem(const LatticeConfig& cfg_, const ModelParams& params_, Partition kappa_);
};

/// v_a(z) = int_0^z (1-a^2) / (1 - 2a cos x + a^2) dx on its globally smooth
/// branch: z + 2 atan(a sin z / (1 - a cos z)).  Odd, v_a(z + 2pi) = v_a(z) + 2pi.
double v_integral(double a, double z);

/// v_a'(z) = (1-a^2)/(1 - 2a cos z + a^2) > 0.
double v_derivative(double a, double z);

/// int_0^z v_a(x) dx = z^2/2 + 2 sum_{k>=1} a^k (1 - cos kz)/k^2.
double v_antiderivative(double a, double z);

double morse_value(const SpectralPoint& xi, const MorseProblem& prob);
std::vector<double> morse_grad(const SpectralPoint& xi, const MorseProblem& prob);
std::vector<double> morse_hess(const SpectralPoint& xi, const MorseProblem& prob);  // m x m

/// Hessian spectrum bounds 2(n + K) with K from the convexity estimates.
/// The *_as_printed pair keeps the literal q_minus term of the source
/// display (which degenerates to 1); reported for diagnostics only.
struct KBounds {
  double k_minus = 0.0;
  double k_plus = 0.0;
  double k_minus_as_printed = 0.0;
  double k_plus_as_printed = 0.0;
};
KBounds k_bounds(const ModelParams& params, const LatticeConfig& cfg);

/// Exact minimum when all parameters vanish; the default Newton start.
SpectralPoint schur_limit_point(const MorseProblem& prob);

/// Multiplicative residual max_j |LHS_j / RHS_j - 1| of the algebraic Bethe
/// Ansatz equations, evaluated through the (alpha, beta) product form --
/// an independent route from the logarithmic solver.
double bae_residual(const SpectralPoint& xi, const MorseProblem& prob);

bool in_open_alcove(const SpectralPoint& xi);
bool satisfies_bounds(const SpectralPoint& xi, const MorseProblem& prob, const KBounds& kb,
                      double slack = 1e-9);

struct BetheSolution {
  Partition kappa;
  SpectralPoint xi;
  double grad_norm = 0.0;
  double hessian_min_eig = 0.0;
  double energy = 0.0;
  double bae_residual = 0.0;
  int iterations = 0;
};

/// Damped Newton iteration on the critical equation, Armijo backtracking
/// (c = 1e-4, halving) on the squared gradient norm; the Hessian is
/// uniformly positive definite, so convergence is global.
BetheSolution solve_bethe(const MorseProblem& prob, double tol = 1e-12);
BetheSolution solve_bethe_from(const MorseProblem& prob, SpectralPoint start,
                               double tol = 1e-12);

struct FlowSample {
  double t = 0.0;
  SpectralPoint xi;
  double grad_norm = 0.0;
};

/// Integrates d xi/dt = -grad V_kappa with an adaptive Dormand-Prince 4(5)
/// pair (rtol 1e-10); returns `samples` equally spaced snapshots on [0, t_end].
std::vector<FlowSample> gradient_flow(const MorseProblem& prob, const SpectralPoint& xi0,
                                      double t_end, int samples);

}  // namespace qtoda
