#pragma once

#include <vector>

#include "qtoda/lattice.hpp"

namespace qtoda {

/// Model parameters (q, p+, q+, p-, q-), all in (-1,1).  The boundary
/// couplings enter the operators through alpha = p*q and beta = p+q;
/// zero values of p or q are admitted.
struct ModelParams {
  double q = 0.0;
  double p_plus = 0.0;
  double q_plus = 0.0;
  double p_minus = 0.0;
  double q_minus = 0.0;

  ModelParams() = default;
  ModelParams(double q_, double p_plus_, double q_plus_, double p_minus_, double q_minus_);

  double alpha_plus() const { return p_plus * q_plus; }
  double beta_plus() const { return p_plus + q_plus; }
  double alpha_minus() const { return p_minus * q_minus; }
  double beta_minus() const { return p_minus + q_minus; }
};

/// q-shifted factorial (a;q)_l = prod_{k=0}^{l-1} (1 - a q^k).
double q_pochhammer(double a, double q, int l);

/// Weight Delta_mu of the perturbed q-multinomial measure on Lambda^(n,m).
double toda_weight(const Partition& mu, const ModelParams& params);

/// Weight Delta'_lambda on the conjugate lattice Lambda^(m,n);
/// satisfies Delta'_{conjugate(mu)} == Delta_mu exactly.
double conjugate_weight(const Partition& lambda, const ModelParams& params);

/// q -> 1 limit of the weights: a two-parameter multinomial distribution.
struct MultinomialWeight {
  double value = 0.0;             ///< the weight of mu itself
  std::vector<double> rho;        ///< cell probabilities rho_0..rho_n
  double normalizer = 0.0;        ///< sum of all weights, closed form
};
MultinomialWeight multinomial_weight(const Partition& mu, const ModelParams& params);

enum class WeightKind { toda, conjugate, multinomial };

/// Weights tabulated over enumerate_partitions(box).  For WeightKind::conjugate
/// the box is the conjugate lattice Lambda^(m,n).
struct WeightTable {
  WeightKind kind = WeightKind::toda;
  LatticeConfig box;
  std::vector<double> values;
};

WeightTable make_weight_table(WeightKind kind, const LatticeConfig& box,
                              const ModelParams& params);

}  // namespace qtoda
