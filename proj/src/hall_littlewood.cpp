#include "qtoda/hall_littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtoda {

namespace {

constexpr double kDenominatorFloor = 1e-12;
constexpr double kImagTolerance = 1e-10;
constexpr int kMaxM = 8;

using cd = std::complex<double>;

cd unit_phase(double t) { return {std::cos(t), std::sin(t)}; }

// c-function on raw arguments; throws when a denominator degenerates
cd c_function_raw(const std::vector<double>& a, const ModelParams& params) {
  const int m = static_cast<int>(a.size());
  const double q = params.q;
  const double ap = params.alpha_plus();
  const double bp = params.beta_plus();
  cd val{1.0, 0.0};
  for (int j = 0; j < m; ++j) {
    const cd e1 = unit_phase(-a[j]);
    const cd e2 = unit_phase(-2.0 * a[j]);
    const cd den = 1.0 - e2;
    if (std::abs(den) < kDenominatorFloor) {
      throw std::domain_error("c_function: spectral point on a singular wall (2 xi_j)");
    }
    val *= (1.0 - bp * e1 + ap * e2) / den;
  }
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const cd ed = unit_phase(-(a[j] - a[k]));
      const cd es = unit_phase(-(a[j] + a[k]));
      const cd dend = 1.0 - ed;
      const cd dens = 1.0 - es;
      if (std::abs(dend) < kDenominatorFloor || std::abs(dens) < kDenominatorFloor) {
        throw std::domain_error("c_function: spectral point on a singular wall (xi_j -+ xi_k)");
      }
      val *= (1.0 - q * ed) / dend * (1.0 - q * es) / dens;
    }
  }
  return val;
}

// compensated accumulation of complex terms
struct KahanComplex {
  cd sum{0.0, 0.0};
  cd comp{0.0, 0.0};
  void add(cd v) {
    const cd y = v - comp;
    const cd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

bool is_regular(const SpectralPoint& xi, double eps) {
  const int m = xi.size();
  for (int j = 0; j < m; ++j) {
    if (std::abs(1.0 - unit_phase(-2.0 * xi.xi[j])) < eps) return false;
    for (int k = j + 1; k < m; ++k) {
      if (std::abs(1.0 - unit_phase(-(xi.xi[j] - xi.xi[k]))) < eps) return false;
      if (std::abs(1.0 - unit_phase(-(xi.xi[j] + xi.xi[k]))) < eps) return false;
    }
  }
  return true;
}

std::complex<double> c_function(const SpectralPoint& xi, const ModelParams& params) {
  return c_function_raw(xi.xi, params);
}

double hl_polynomial(const Partition& lambda, const SpectralPoint& xi,
                     const ModelParams& params) {
  const int m = xi.size();
  if (m != lambda.box().n) {
    throw std::invalid_argument("hl_polynomial: lambda must have m parts");
  }
  if (m > kMaxM) {
    throw std::invalid_argument("hl_polynomial: m > 8 not supported");
  }

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> args(static_cast<std::size_t>(m));

  KahanComplex acc;
  do {
    for (unsigned signs = 0; signs < (1u << m); ++signs) {
      double phase = 0.0;
      for (int j = 0; j < m; ++j) {
        const double s = (signs >> j) & 1u ? -1.0 : 1.0;
        args[static_cast<std::size_t>(j)] = s * xi.xi[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        phase += args[static_cast<std::size_t>(j)] * lambda.parts()[static_cast<std::size_t>(j)];
      }
      acc.add(c_function_raw(args, params) * unit_phase(phase));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double re = acc.sum.real();
  const double im = acc.sum.imag();
  if (std::abs(im) > kImagTolerance * std::max(1.0, std::abs(re))) {
    throw std::runtime_error("hl_polynomial: imaginary residue exceeds tolerance");
  }
  return re;
}

WaveFunction wave_function(const SpectralPoint& xi, const LatticeConfig& cfg,
                           const ModelParams& params) {
  if (xi.size() != cfg.m) {
    throw std::invalid_argument("wave_function: xi must have m entries");
  }
  WaveFunction wf;
  const auto basis = enumerate_partitions(cfg);
  wf.values.reserve(basis.size());
  for (const auto& mu : basis) {
    wf.values.push_back(hl_polynomial(conjugate(mu), xi, params));
  }
  wf.origin_value = wf.values.front();  // enumeration starts at (0^n)
  return wf;
}

double poincare_value(int m, const ModelParams& params) {
  const double q = params.q;
  return q_pochhammer(params.alpha_plus(), q, m) * q_pochhammer(q, q, m) /
         std::pow(1.0 - q, m);
}

double hl_univariate_q1(int l, double theta, const ModelParams& params) {
  const cd e1 = unit_phase(-theta);
  const cd e2 = unit_phase(-2.0 * theta);
  const cd den = 1.0 - e2;
  if (std::abs(den) < kDenominatorFloor) {
    throw std::domain_error("hl_univariate_q1: theta in pi Z");
  }
  const cd t = (1.0 - params.beta_plus() * e1 + params.alpha_plus() * e2) / den *
               unit_phase(l * theta);
  return 2.0 * t.real();
}

double hl_factorized_q1(const Partition& lambda, const SpectralPoint& xi,
                        const ModelParams& params) {
  const int m = xi.size();
  if (m != lambda.box().n) {
    throw std::invalid_argument("hl_factorized_q1: lambda must have m parts");
  }
  if (m > kMaxM) {
    throw std::invalid_argument("hl_factorized_q1: m > 8 not supported");
  }
  // univariate values R_l(xi_j) tabulated once
  const int n = lambda.box().m;
  std::vector<double> table(static_cast<std::size_t>((n + 1) * m));
  for (int l = 0; l <= n; ++l) {
    for (int j = 0; j < m; ++j) {
      table[static_cast<std::size_t>(l * m + j)] =
          hl_univariate_q1(l, xi.xi[static_cast<std::size_t>(j)], params);
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    double prod = 1.0;
    for (int j = 0; j < m; ++j) {
      prod *= table[static_cast<std::size_t>(lambda.parts()[static_cast<std::size_t>(j)] * m +
                                             perm[static_cast<std::size_t>(j)])];
    }
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace qtoda
