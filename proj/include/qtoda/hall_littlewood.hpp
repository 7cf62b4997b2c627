#pragma once

#include <complex>
#include <vector>

#include "qtoda/lattice.hpp"
#include "qtoda/measures.hpp"

namespace qtoda {

/// Spectral parameter (xi_1,...,xi_m), radians.
struct SpectralPoint {
  std::vector<double> xi;

  int size() const { return static_cast<int>(xi.size()); }
};

/// True when all denominators of the c-function stay away from zero:
/// 2 xi_j and xi_j +- xi_k (j != k) at distance > eps from 2 pi Z.
bool is_regular(const SpectralPoint& xi, double eps = 1e-12);

/// The c-function of the hyperoctahedral Hall-Littlewood polynomial,
/// evaluated at the given (possibly signed/permuted) arguments.
/// Throws std::domain_error when a denominator falls below 1e-12.
std::complex<double> c_function(const SpectralPoint& xi, const ModelParams& params);

/// Macdonald's hyperoctahedral (BC_m) Hall-Littlewood polynomial
/// R_lambda(xi): plane-wave sum over S_m x {1,-1}^m with c-function
/// coefficients.  Real-valued; the imaginary residue of the complex
/// summation is checked against 1e-10 (relative) and raises on excess.
/// m <= 8 enforced.
double hl_polynomial(const Partition& lambda, const SpectralPoint& xi,
                     const ModelParams& params);

/// Bethe Ansatz wave function tabulated over Lambda^(n,m):
/// psi_xi(mu) = R_{mu'}(xi).
struct WaveFunction {
  std::vector<double> values;  // enumeration order
  double origin_value = 0.0;   // psi_xi(0^n)
};
WaveFunction wave_function(const SpectralPoint& xi, const LatticeConfig& cfg,
                           const ModelParams& params);

/// Closed form of R_{(0^m)}(xi): (alpha_+;q)_m (q;q)_m / (1-q)^m,
/// independent of xi.
double poincare_value(int m, const ModelParams& params);

/// Univariate (BC_1-type) Hall-Littlewood polynomial R_l(theta) of the
/// q -> 1 theory; uses the (alpha_+, beta_+) boundary pair.
double hl_univariate_q1(int l, double theta, const ModelParams& params);

/// q -> 1 factorized polynomial: sum over S_m of prod_j R_{lambda_j}(xi_{sigma(j)}).
/// Well-defined also at points with repeated entries.
double hl_factorized_q1(const Partition& lambda, const SpectralPoint& xi,
                        const ModelParams& params);

}  // namespace qtoda
