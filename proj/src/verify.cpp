#include "qtoda/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qtoda {

namespace {

double sup_norm(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

bool unconditional_orthogonality_regime(const LatticeConfig& cfg, const ModelParams& p) {
  if (p.q == 0.0) return true;                                            // (a)
  if (p.alpha_plus() == 0.0 && p.alpha_minus() == 0.0 && p.q > 0.0) return true;  // (b)
  if (cfg.n >= 2 * cfg.m) return true;                                    // (c)
  if (cfg.n == 1) return true;                                            // (d)
  return false;
}

}  // namespace

VerificationReport run_verification(const LatticeConfig& cfg, const ModelParams& params,
                                    double tol) {
  VerificationReport report;
  report.cfg = cfg;
  report.params = params;
  report.kb = k_bounds(params, cfg);

  const LatticeOperator op = build_toda(cfg, params);
  report.self_adjoint_residual = check_self_adjoint(op);
  report.matrix_max_abs = sup_norm(op.matrix);

  report.eigensystem = build_eigensystem(cfg, params, tol);
  const EigenSystem& es = report.eigensystem;
  report.orthogonality = orthogonality_report(es, op.weight);

  report.max_grad_norm = 0.0;
  report.max_bae_residual = 0.0;
  report.min_hessian_eig = std::numeric_limits<double>::infinity();
  report.all_in_alcove = true;
  report.all_bounds_ok = true;
  for (const auto& sol : es.solutions) {
    report.max_grad_norm = std::max(report.max_grad_norm, sol.grad_norm);
    report.max_bae_residual = std::max(report.max_bae_residual, sol.bae_residual);
    report.min_hessian_eig = std::min(report.min_hessian_eig, sol.hessian_min_eig);
    if (!in_open_alcove(sol.xi)) report.all_in_alcove = false;
    MorseProblem prob(cfg, params, sol.kappa);
    if (!satisfies_bounds(sol.xi, prob, report.kb)) report.all_bounds_ok = false;
  }
  report.hessian_lower_bound = 2.0 * (cfg.n + report.kb.k_minus);

  report.min_pairwise_xi_distance = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < es.solutions.size(); ++r) {
    for (std::size_t c = r + 1; c < es.solutions.size(); ++c) {
      double d = 0.0;
      for (std::size_t j = 0; j < es.solutions[r].xi.xi.size(); ++j) {
        d = std::max(d, std::abs(es.solutions[r].xi.xi[j] - es.solutions[c].xi.xi[j]));
      }
      report.min_pairwise_xi_distance = std::min(report.min_pairwise_xi_distance, d);
    }
  }
  if (es.solutions.size() < 2) report.min_pairwise_xi_distance = 0.0;

  // spectrum multiset against the oracle
  {
    std::vector<double> energies;
    energies.reserve(es.solutions.size());
    for (const auto& sol : es.solutions) energies.push_back(sol.energy);
    std::sort(energies.begin(), energies.end());
    const std::vector<double> oracle = oracle_spectrum(op);
    for (std::size_t i = 0; i < energies.size(); ++i) {
      report.spectrum_max_diff =
          std::max(report.spectrum_max_diff, std::abs(energies[i] - oracle[i]));
    }
  }

  report.orthogonality_unconditional = unconditional_orthogonality_regime(cfg, params);

  auto add = [&](const std::string& name, double value, double threshold, bool pass) {
    report.checks.push_back({name, pass, value, threshold});
  };
  add("self_adjoint", report.self_adjoint_residual, 1e-12 * report.matrix_max_abs,
      report.self_adjoint_residual <= 1e-12 * report.matrix_max_abs);
  add("bethe_gradient", report.max_grad_norm, tol, report.max_grad_norm <= tol);
  add("alcove", report.all_in_alcove ? 1.0 : 0.0, 1.0, report.all_in_alcove);
  add("solution_bounds", report.all_bounds_ok ? 1.0 : 0.0, 1.0, report.all_bounds_ok);
  add("bae_residual", report.max_bae_residual, 1e-12, report.max_bae_residual <= 1e-12);
  add("eigenvalue_equation", es.max_eigen_residual, 1e-9, es.max_eigen_residual <= 1e-9);
  add("spectrum_multiset", report.spectrum_max_diff, 1e-9, report.spectrum_max_diff <= 1e-9);
  add("completeness", es.smallest_singular, 1e-8 * es.largest_singular,
      es.smallest_singular > 1e-8 * es.largest_singular);
  {
    const double g = report.orthogonality_unconditional
                         ? report.orthogonality.max_offdiag
                         : report.orthogonality.max_offdiag_distinct;
    add("orthogonality", g, 1e-9, g <= 1e-9);
  }
  {
    const double slack = 1e-9 * (1.0 + report.hessian_lower_bound);
    add("hessian_bound", report.min_hessian_eig, report.hessian_lower_bound,
        report.min_hessian_eig >= report.hessian_lower_bound - slack);
  }
  add("distinctness", report.min_pairwise_xi_distance, 1e-8,
      es.solutions.size() < 2 || report.min_pairwise_xi_distance > 1e-8);

  report.passed = true;
  for (const auto& c : report.checks) {
    if (!c.passed) report.passed = false;
  }
  return report;
}

}  // namespace qtoda
