#include "qtoda/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qtoda/jacobi.hpp"

namespace qtoda {

namespace {

constexpr double kPi = std::numbers::pi;

double sup_norm(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solve H x = b for symmetric positive definite H (m <= 8 here).
std::vector<double> cholesky_solve(std::vector<double> h, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t j = 0; j < n; ++j) {
    double d = h[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= h[j * n + k] * h[j * n + k];
    if (d <= 0.0) throw std::runtime_error("cholesky_solve: matrix not positive definite");
    const double l = std::sqrt(d);
    h[j * n + j] = l;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = h[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= h[i * n + k] * h[j * n + k];
      h[i * n + j] = s / l;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {  // forward
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= h[i * n + k] * b[k];
    b[i] = s / h[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {  // backward
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= h[k * n + i] * b[k];
    b[i] = s / h[i * n + i];
  }
  return b;
}

int quantum_number(const MorseProblem& prob, int j) {  // 1-based j
  return prob.cfg.m + 1 - j + prob.kappa.parts()[static_cast<std::size_t>(j - 1)];
}

std::array<double, 4> boundary_roots(const ModelParams& p) {
  return {p.p_plus, p.q_plus, p.p_minus, p.q_minus};
}

}  // namespace

MorseProblem::MorseProblem(const LatticeConfig& cfg_, const ModelParams& params_,
                           Partition kappa_)
    : cfg(cfg_), params(params_), kappa(std::move(kappa_)) {
  validate(cfg);
  if (!(kappa.box() == conjugate_box(cfg))) {
    throw std::invalid_argument("MorseProblem: kappa must lie in Lambda^(m,n)");
  }
}

double v_integral(double a, double z) {
  if (!(a > -1.0 && a < 1.0)) throw std::invalid_argument("v_integral requires |a| < 1");
  return z + 2.0 * std::atan2(a * std::sin(z), 1.0 - a * std::cos(z));
}

double v_derivative(double a, double z) {
  if (!(a > -1.0 && a < 1.0)) throw std::invalid_argument("v_derivative requires |a| < 1");
  return (1.0 - a * a) / (1.0 - 2.0 * a * std::cos(z) + a * a);
}

double v_antiderivative(double a, double z) {
  if (!(a > -1.0 && a < 1.0)) throw std::invalid_argument("v_antiderivative requires |a| < 1");
  const double lead = 0.5 * z * z;
  if (a == 0.0) return lead;
  double acc = 0.0;
  double ak = 1.0;
  const double abs_a = std::abs(a);
  for (int k = 1; k < 5000000; ++k) {
    ak *= a;
    const double kk = static_cast<double>(k) * k;
    acc += 2.0 * ak * (1.0 - std::cos(k * z)) / kk;
    // geometric tail bound: sum_{j>k} 4|a|^j/j^2 <= 4 |a|^{k+1} / (k^2 (1-|a|))
    if (4.0 * std::abs(ak) * abs_a / (kk * (1.0 - abs_a)) <
        1e-17 * (1.0 + std::abs(acc) + lead)) {
      return lead + acc;
    }
  }
  throw std::runtime_error("v_antiderivative: series did not converge");
}

double morse_value(const SpectralPoint& xi, const MorseProblem& prob) {
  const int m = prob.cfg.m;
  if (xi.size() != m) throw std::invalid_argument("morse_value: xi must have m entries");
  const int n = prob.cfg.n;
  const auto roots = boundary_roots(prob.params);
  double val = 0.0;
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      val += v_antiderivative(prob.params.q, xi.xi[j] + xi.xi[k]) +
             v_antiderivative(prob.params.q, xi.xi[j] - xi.xi[k]);
    }
  }
  for (int j = 0; j < m; ++j) {
    val += n * xi.xi[j] * xi.xi[j] - 2.0 * kPi * quantum_number(prob, j + 1) * xi.xi[j];
    for (double a : roots) val += v_antiderivative(a, xi.xi[j]);
  }
  return val;
}

std::vector<double> morse_grad(const SpectralPoint& xi, const MorseProblem& prob) {
  const int m = prob.cfg.m;
  if (xi.size() != m) throw std::invalid_argument("morse_grad: xi must have m entries");
  const int n = prob.cfg.n;
  const auto roots = boundary_roots(prob.params);
  std::vector<double> g(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    double gj = 2.0 * n * xi.xi[j] - 2.0 * kPi * quantum_number(prob, j + 1);
    for (double a : roots) gj += v_integral(a, xi.xi[j]);
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      gj += v_integral(prob.params.q, xi.xi[j] + xi.xi[k]) +
            v_integral(prob.params.q, xi.xi[j] - xi.xi[k]);
    }
    g[static_cast<std::size_t>(j)] = gj;
  }
  return g;
}

std::vector<double> morse_hess(const SpectralPoint& xi, const MorseProblem& prob) {
  const int m = prob.cfg.m;
  if (xi.size() != m) throw std::invalid_argument("morse_hess: xi must have m entries");
  const int n = prob.cfg.n;
  const auto roots = boundary_roots(prob.params);
  std::vector<double> h(static_cast<std::size_t>(m) * m, 0.0);
  for (int j = 0; j < m; ++j) {
    double d = 2.0 * n;
    for (double a : roots) d += v_derivative(a, xi.xi[j]);
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      const double vs = v_derivative(prob.params.q, xi.xi[j] + xi.xi[k]);
      const double vd = v_derivative(prob.params.q, xi.xi[j] - xi.xi[k]);
      d += vs + vd;
      h[static_cast<std::size_t>(j * m + k)] = vs - vd;
    }
    h[static_cast<std::size_t>(j * m + j)] = d;
  }
  return h;
}

KBounds k_bounds(const ModelParams& params, const LatticeConfig& cfg) {
  const auto ratio = [](double x) { return (1.0 + std::abs(x)) / (1.0 - std::abs(x)); };
  const auto roots = boundary_roots(params);
  KBounds kb;
  kb.k_plus = (cfg.m - 1) * ratio(params.q);
  kb.k_minus = (cfg.m - 1) / ratio(params.q);
  for (double a : roots) {
    kb.k_plus += 0.5 * ratio(a);
    kb.k_minus += 0.5 / ratio(a);
  }
  // literal form of the source display: the q_minus term reads
  // (1-|q_-|)/(1-|q_-|) = 1 under both exponents
  kb.k_plus_as_printed = kb.k_plus - 0.5 * ratio(params.q_minus) + 0.5;
  kb.k_minus_as_printed = kb.k_minus - 0.5 / ratio(params.q_minus) + 0.5;
  return kb;
}

SpectralPoint schur_limit_point(const MorseProblem& prob) {
  const int m = prob.cfg.m;
  SpectralPoint xi;
  xi.xi.resize(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    xi.xi[static_cast<std::size_t>(j - 1)] =
        kPi * quantum_number(prob, j) / (prob.cfg.m + prob.cfg.n + 1);
  }
  return xi;
}

double bae_residual(const SpectralPoint& xi, const MorseProblem& prob) {
  using cd = std::complex<double>;
  const int m = prob.cfg.m;
  const int n = prob.cfg.n;
  const double q = prob.params.q;
  const double ap = prob.params.alpha_plus(), bp = prob.params.beta_plus();
  const double am = prob.params.alpha_minus(), bm = prob.params.beta_minus();
  const auto phase = [](double t) { return cd{std::cos(t), std::sin(t)}; };

  double worst = 0.0;
  for (int j = 0; j < m; ++j) {
    const cd z = phase(xi.xi[j]);
    const cd z2 = phase(2.0 * xi.xi[j]);
    const cd lhs = phase(2.0 * n * xi.xi[j]);
    cd rhs = (1.0 - bp * z + ap * z2) / (z2 - bp * z + ap) *
             ((1.0 - bm * z + am * z2) / (z2 - bm * z + am));
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      const cd ed = phase(xi.xi[j] - xi.xi[k]);
      const cd es = phase(xi.xi[j] + xi.xi[k]);
      rhs *= (1.0 - q * ed) * (1.0 - q * es) / ((ed - q) * (es - q));
    }
    worst = std::max(worst, std::abs(lhs / rhs - 1.0));
  }
  return worst;
}

bool in_open_alcove(const SpectralPoint& xi) {
  const int m = xi.size();
  if (m == 0) return false;
  if (!(xi.xi.front() < kPi) || !(xi.xi.back() > 0.0)) return false;
  for (int j = 0; j + 1 < m; ++j) {
    if (!(xi.xi[j] > xi.xi[j + 1])) return false;
  }
  return true;
}

bool satisfies_bounds(const SpectralPoint& xi, const MorseProblem& prob, const KBounds& kb,
                      double slack) {
  const int m = prob.cfg.m;
  const int n = prob.cfg.n;
  for (int j = 1; j <= m; ++j) {
    const double num = kPi * quantum_number(prob, j);
    const double lo = num / (n + kb.k_plus);
    const double hi = num / (n + kb.k_minus);
    const double eps = slack * (1.0 + std::abs(hi));
    const double x = xi.xi[static_cast<std::size_t>(j - 1)];
    if (x < lo - eps || x > hi + eps) return false;
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = j + 1; k <= m; ++k) {
      const double num = kPi * (quantum_number(prob, j) - quantum_number(prob, k));
      const double lo = num / (n + kb.k_plus);
      const double hi = num / (n + kb.k_minus);
      const double eps = slack * (1.0 + std::abs(hi));
      const double d = xi.xi[static_cast<std::size_t>(j - 1)] - xi.xi[static_cast<std::size_t>(k - 1)];
      if (d < lo - eps || d > hi + eps) return false;
    }
  }
  return true;
}

BetheSolution solve_bethe(const MorseProblem& prob, double tol) {
  return solve_bethe_from(prob, schur_limit_point(prob), tol);
}

BetheSolution solve_bethe_from(const MorseProblem& prob, SpectralPoint start, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_bethe: tol must be positive");
  const int m = prob.cfg.m;
  if (start.size() != m) throw std::invalid_argument("solve_bethe: start must have m entries");

  constexpr int kMaxIterations = 200;
  constexpr double kArmijoC = 1e-4;

  SpectralPoint xi = std::move(start);
  std::vector<double> g = morse_grad(xi, prob);
  int iterations = 0;

  while (sup_norm(g) > tol) {
    if (++iterations > kMaxIterations) {
      throw std::runtime_error("solve_bethe: Newton iteration cap exceeded");
    }
    std::vector<double> neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    const std::vector<double> d = cholesky_solve(morse_hess(xi, prob), std::move(neg));

    // Armijo on phi = |g|^2/2; the Newton direction has slope -|g|^2
    const double phi0 = 0.5 * dot(g, g);
    double step = 1.0;
    SpectralPoint trial = xi;
    std::vector<double> gt;
    while (true) {
      for (std::size_t i = 0; i < d.size(); ++i) trial.xi[i] = xi.xi[i] + step * d[i];
      gt = morse_grad(trial, prob);
      if (0.5 * dot(gt, gt) <= phi0 * (1.0 - 2.0 * kArmijoC * step)) break;
      step *= 0.5;
      if (step < 1e-16) {
        throw std::runtime_error("solve_bethe: line search failed");
      }
    }
    xi = trial;
    g = std::move(gt);
  }

  // polish: full Newton steps while they still reduce the residual
  for (int extra = 0; extra < 2; ++extra) {
    std::vector<double> neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    const std::vector<double> d = cholesky_solve(morse_hess(xi, prob), std::move(neg));
    SpectralPoint trial = xi;
    for (std::size_t i = 0; i < d.size(); ++i) trial.xi[i] += d[i];
    std::vector<double> gt = morse_grad(trial, prob);
    if (sup_norm(gt) < sup_norm(g)) {
      xi = trial;
      g = std::move(gt);
    } else {
      break;
    }
  }

  BetheSolution sol{prob.kappa, xi};
  sol.grad_norm = sup_norm(g);
  sol.hessian_min_eig =
      jacobi_eigenvalues(morse_hess(xi, prob), static_cast<std::size_t>(m)).front();
  double energy = 0.0;
  for (double x : xi.xi) energy += std::cos(x);
  sol.energy = 2.0 * (1.0 - prob.params.q) * energy;
  sol.bae_residual = bae_residual(xi, prob);
  sol.iterations = iterations;
  return sol;
}

namespace {

// Dormand-Prince 4(5) coefficients
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 5179.0 / 57600, kE3 = 7571.0 / 16695, kE4 = 393.0 / 640,
                 kE5 = -92097.0 / 339200, kE6 = 187.0 / 2100, kE7 = 1.0 / 40;

}  // namespace

std::vector<FlowSample> gradient_flow(const MorseProblem& prob, const SpectralPoint& xi0,
                                      double t_end, int samples) {
  const int m = prob.cfg.m;
  if (xi0.size() != m) throw std::invalid_argument("gradient_flow: xi0 must have m entries");
  if (!(t_end > 0.0) || samples < 2) {
    throw std::invalid_argument("gradient_flow: need t_end > 0 and samples >= 2");
  }

  const auto rhs = [&](const std::vector<double>& y) {
    SpectralPoint p{y};
    std::vector<double> g = morse_grad(p, prob);
    for (double& x : g) x = -x;
    return g;
  };

  constexpr double kRelTol = 1e-10;
  constexpr double kAbsTol = 1e-13;

  std::vector<FlowSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  std::vector<double> y = xi0.xi;
  double t = 0.0;
  const auto record = [&](double time, const std::vector<double>& state) {
    SpectralPoint p{state};
    out.push_back({time, p, sup_norm(morse_grad(p, prob))});
  };
  record(0.0, y);

  double h_prop = std::min(1e-3, t_end / 10.0);
  const double dt_out = t_end / (samples - 1);

  std::vector<double> k1, k2, k3, k4, k5, k6, k7, tmp(y.size()), y5(y.size());
  for (int s = 1; s < samples; ++s) {
    const double t_target = s * dt_out;
    while (t < t_target - 1e-15 * t_end) {
      const double h = std::min(h_prop, t_target - t);
      if (h < 1e-14 * std::max(1.0, t_end)) {
        throw std::runtime_error("gradient_flow: step size underflow");
      }
      k1 = rhs(y);
      for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * kA21 * k1[i];
      k2 = rhs(tmp);
      for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
      k3 = rhs(tmp);
      for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
      k4 = rhs(tmp);
      for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
      k5 = rhs(tmp);
      for (std::size_t i = 0; i < y.size(); ++i)
        tmp[i] = y[i] +
                 h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] + kA65 * k5[i]);
      k6 = rhs(tmp);
      for (std::size_t i = 0; i < y.size(); ++i)
        y5[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] + kB6 * k6[i]);
      k7 = rhs(y5);

      double err_norm = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double y4 = y[i] + h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                                      kE6 * k6[i] + kE7 * k7[i]);
        const double scale = kAbsTol + kRelTol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err_norm = std::max(err_norm, std::abs(y5[i] - y4) / scale);
      }
      if (err_norm <= 1.0) {
        t += h;
        y = y5;
        const double grow = err_norm == 0.0 ? 5.0 : 0.9 * std::pow(err_norm, -0.2);
        h_prop = h * std::clamp(grow, 0.2, 5.0);
      } else {
        h_prop = h * std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 0.9);
      }
    }
    record(t_target, y);
  }
  return out;
}

}  // namespace qtoda
