#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "qtoda/lattice.hpp"
#include "qtoda/measures.hpp"

namespace qtoda {

/// Dense operator on Lambda^(n,m), rows/columns in enumeration order,
/// together with the weights of the ambient inner product.  entry(r,c) is
/// the coefficient of psi(mu_c) in (H psi)(mu_r).
struct LatticeOperator {
  LatticeConfig cfg;
  std::vector<Partition> basis;
  std::vector<double> matrix;  // row-major, dim x dim
  WeightTable weight;

  std::size_t dim() const { return basis.size(); }
  double entry(std::size_t r, std::size_t c) const { return matrix[r * dim() + c]; }
  double& entry(std::size_t r, std::size_t c) { return matrix[r * dim() + c]; }
};

/// The q-difference Toda hamiltonian with two-sided boundary interactions.
/// Off-diagonal entries connect mu and mu +- e_i only; hops leaving the
/// lattice carry vanishing coefficients and are not stored.
LatticeOperator build_toda(const LatticeConfig& cfg, const ModelParams& params);

/// The q -> 1 limit operator (H/(1-q) as q -> 1): linear hopping
/// coefficients, ambient weight = multinomial.
LatticeOperator build_toda_q1(const LatticeConfig& cfg, const ModelParams& params);

/// Weighted inner product sum_mu psi(mu) phi(mu) w_mu (real-valued functions).
double inner_product(std::span<const double> psi, std::span<const double> phi,
                     const WeightTable& w);

/// Max over entries of |w_r M_rc - w_c M_cr|; zero in exact arithmetic.
double check_self_adjoint(const LatticeOperator& op);

/// Similarity transform S = D^{1/2} M D^{-1/2}, D = diag(weights); symmetric
/// in exact arithmetic, and the input to the dense eigensolver.
std::vector<double> symmetrized(const LatticeOperator& op);

/// y = M x.
std::vector<double> apply_operator(const LatticeOperator& op, std::span<const double> x);

/// Row-major CSV dump; the header line documents the enumeration order.
void write_matrix_csv(std::ostream& os, const LatticeOperator& op);

}  // namespace qtoda
