#include "qtoda/q1_limit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qtoda/jacobi.hpp"
#include "qtoda/spectrum.hpp"

namespace qtoda {

namespace {

constexpr double kPi = std::numbers::pi;

double sup_norm(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

double decoupled_lhs(int n, double theta, const ModelParams& p) {
  return 2.0 * n * theta + v_integral(p.p_plus, theta) + v_integral(p.q_plus, theta) +
         v_integral(p.p_minus, theta) + v_integral(p.q_minus, theta);
}

double decoupled_slope(int n, double theta, const ModelParams& p) {
  return 2.0 * n + v_derivative(p.p_plus, theta) + v_derivative(p.q_plus, theta) +
         v_derivative(p.p_minus, theta) + v_derivative(p.q_minus, theta);
}

}  // namespace

double bs_polynomial(int n, double theta, const ModelParams& params) {
  using cd = std::complex<double>;
  const cd e1{std::cos(theta), -std::sin(theta)};
  const cd e2{std::cos(2.0 * theta), -std::sin(2.0 * theta)};
  const cd den = 1.0 - e2;
  if (std::abs(den) < 1e-12) throw std::domain_error("bs_polynomial: theta in pi Z");
  const cd num = (1.0 - params.p_plus * e1) * (1.0 - params.q_plus * e1) *
                 (1.0 - params.p_minus * e1) * (1.0 - params.q_minus * e1);
  const cd t = num / den * cd{std::cos((n + 1) * theta), std::sin((n + 1) * theta)};
  return 2.0 * t.real();
}

AskeyWilsonRoots aw_roots(int n, const ModelParams& params) {
  if (n < 0) throw std::invalid_argument("aw_roots: n must be nonnegative");
  AskeyWilsonRoots roots;
  roots.params = params;
  roots.thetas.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double target = 2.0 * kPi * (k + 1);
    double lo = 0.0, hi = kPi;
    double theta = kPi * (k + 1) / (n + 2);
    for (int it = 0; it < 200; ++it) {
      const double g = decoupled_lhs(n, theta, params) - target;
      if (g > 0.0) {
        hi = theta;
      } else {
        lo = theta;
      }
      double next = theta - g / decoupled_slope(n, theta, params);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - theta) < 1e-16 * kPi) {
        theta = next;
        break;
      }
      theta = next;
    }
    roots.thetas.push_back(theta);
  }
  return roots;
}

SpectralPoint q1_bethe_solution(const Partition& kappa, const AskeyWilsonRoots& roots) {
  const int n = static_cast<int>(roots.thetas.size()) - 1;
  if (kappa.box().m != n) {
    throw std::invalid_argument("q1_bethe_solution: kappa parts must lie in 0..n");
  }
  SpectralPoint xi;
  xi.xi.reserve(kappa.parts().size());
  for (int part : kappa.parts()) {
    xi.xi.push_back(roots.thetas[static_cast<std::size_t>(part)]);
  }
  return xi;
}

Q1Report verify_q1_eigensystem(const LatticeConfig& cfg, const ModelParams& params,
                               double tol) {
  validate(cfg);
  Q1Report report;
  report.cfg = cfg;
  report.params = params;

  const AskeyWilsonRoots roots = aw_roots(cfg.n, params);
  report.thetas = roots.thetas;
  report.roots_increasing = true;
  double prev = 0.0;
  for (double t : roots.thetas) {
    if (!(t > prev && t < kPi)) report.roots_increasing = false;
    prev = t;
    report.bs_residual_max =
        std::max(report.bs_residual_max, std::abs(bs_polynomial(cfg.n, t, params)));
  }

  const LatticeOperator op = build_toda_q1(cfg, params);
  const std::size_t size = op.dim();
  report.self_adjoint_residual = check_self_adjoint(op);
  report.matrix_max_abs = sup_norm(op.matrix);

  // multinomial normalization against the closed form
  {
    double total = 0.0;
    for (double w : op.weight.values) total += w;
    const double closed = multinomial_weight(op.basis.front(), params).normalizer;
    report.multinomial_norm_rel_err = std::abs(total - closed) / std::abs(closed);
  }

  const auto kappas = enumerate_partitions(conjugate_box(cfg));
  std::vector<double> vectors(size * size, 0.0);
  report.solutions.reserve(size);
  for (std::size_t r = 0; r < size; ++r) {
    Q1Solution sol{kappas[r], q1_bethe_solution(kappas[r], roots)};
    sol.energy = energy(sol.xi, 0.0);
    for (std::size_t j = 0; j < sol.xi.xi.size(); ++j) {
      const int part = kappas[r].parts()[j];
      sol.grad_residual = std::max(
          sol.grad_residual, std::abs(decoupled_lhs(cfg.n, sol.xi.xi[j], params) -
                                      2.0 * kPi * (part + 1)));
    }
    for (std::size_t c = 0; c < size; ++c) {
      vectors[r * size + c] = hl_factorized_q1(conjugate(op.basis[c]), sol.xi, params);
    }
    const std::vector<double> row(vectors.begin() + r * size, vectors.begin() + (r + 1) * size);
    const std::vector<double> hv = apply_operator(op, row);
    double residual = 0.0;
    for (std::size_t c = 0; c < size; ++c) {
      residual = std::max(residual, std::abs(hv[c] - sol.energy * row[c]));
    }
    sol.eigen_residual = residual / sup_norm(row);
    report.max_eigen_residual = std::max(report.max_eigen_residual, sol.eigen_residual);
    report.max_grad_residual = std::max(report.max_grad_residual, sol.grad_residual);
    report.solutions.push_back(std::move(sol));
  }

  // unconditional orthogonality in the multinomial weights
  std::vector<double> gram(size * size, 0.0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r; c < size; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < size; ++k) {
        s += vectors[r * size + k] * vectors[c * size + k] * op.weight.values[k];
      }
      gram[r * size + c] = s;
      gram[c * size + r] = s;
    }
  }
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = r + 1; c < size; ++c) {
      report.gram_max_offdiag =
          std::max(report.gram_max_offdiag,
                   std::abs(gram[r * size + c]) /
                       std::sqrt(gram[r * size + r] * gram[c * size + c]));
    }
  }

  // completeness of the factorized eigenbasis
  {
    std::vector<double> aat(size * size, 0.0);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = r; c < size; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < size; ++k) {
          s += vectors[r * size + k] * vectors[c * size + k];
        }
        aat[r * size + c] = s;
        aat[c * size + r] = s;
      }
    }
    const auto evals = jacobi_eigenvalues(std::move(aat), size);
    const double smin = std::sqrt(std::max(evals.front(), 0.0));
    const double smax = std::sqrt(std::max(evals.back(), 0.0));
    report.condition_number = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  }

  // spectrum multiset against the Jacobi oracle
  {
    std::vector<double> energies;
    energies.reserve(size);
    for (const auto& sol : report.solutions) energies.push_back(sol.energy);
    std::sort(energies.begin(), energies.end());
    const std::vector<double> oracle = oracle_spectrum(op);
    for (std::size_t i = 0; i < size; ++i) {
      report.spectrum_max_diff =
          std::max(report.spectrum_max_diff, std::abs(energies[i] - oracle[i]));
    }
  }

  // m = 1 reduces to a three-term recurrence in the univariate polynomials
  if (cfg.m == 1) {
    const double ap = params.alpha_plus(), bp = params.beta_plus();
    const double am = params.alpha_minus(), bm = params.beta_minus();
    for (int k = 0; k <= cfg.n; ++k) {
      const double theta = roots.thetas[static_cast<std::size_t>(k)];
      for (int l = 0; l <= cfg.n; ++l) {
        const double rl = hl_univariate_q1(l, theta, params);
        double rhs = (bp * (l == 0 ? 1.0 : 0.0) + bm * (l == cfg.n ? 1.0 : 0.0)) * rl;
        if (l < cfg.n) rhs += (l == 0 ? 1.0 - ap : 1.0) * hl_univariate_q1(l + 1, theta, params);
        if (l > 0) rhs += (l == cfg.n ? 1.0 - am : 1.0) * hl_univariate_q1(l - 1, theta, params);
        const double lhs = 2.0 * std::cos(theta) * rl;
        report.m1_recurrence_residual =
            std::max(report.m1_recurrence_residual,
                     std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
  }

  report.passed = report.roots_increasing && report.bs_residual_max <= 1e-10 &&
                  report.max_grad_residual <= 1e-10 && report.max_eigen_residual <= tol &&
                  report.gram_max_offdiag <= tol && report.spectrum_max_diff <= tol &&
                  report.multinomial_norm_rel_err <= 1e-12 &&
                  report.m1_recurrence_residual <= tol;
  return report;
}

}  // namespace qtoda
