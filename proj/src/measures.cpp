#include "qtoda/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace qtoda {

namespace {

void require_open_unit(double x, const char* name) {
  if (!(x > -1.0 && x < 1.0)) {
    throw std::invalid_argument(std::string(name) + " outside (-1,1)");
  }
}

// true factorial for small arguments, lgamma otherwise
double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

ModelParams::ModelParams(double q_, double p_plus_, double q_plus_, double p_minus_,
                         double q_minus_)
    : q(q_), p_plus(p_plus_), q_plus(q_plus_), p_minus(p_minus_), q_minus(q_minus_) {
  require_open_unit(q, "q");
  require_open_unit(p_plus, "p_plus");
  require_open_unit(q_plus, "q_plus");
  require_open_unit(p_minus, "p_minus");
  require_open_unit(q_minus, "q_minus");
}

double q_pochhammer(double a, double q, int l) {
  if (l < 0) throw std::invalid_argument("q_pochhammer requires l >= 0");
  double p = 1.0;
  double qk = 1.0;
  for (int k = 0; k < l; ++k) {
    p *= 1.0 - a * qk;
    qk *= q;
  }
  return p;
}

namespace {

// log of (a;q)_l; valid since every factor 1 - a q^k is positive for |a|,|q| < 1
double log_q_pochhammer(double a, double q, int l) {
  double s = 0.0;
  double qk = 1.0;
  for (int k = 0; k < l; ++k) {
    s += std::log1p(-a * qk);
    qk *= q;
  }
  return s;
}

double toda_weight_from_counts(int m, int c_plus, int c_minus, const std::vector<int>& diffs,
                               const ModelParams& params) {
  const double q = params.q;
  if (m > 20) {
    double lg = log_q_pochhammer(q, q, m) - log_q_pochhammer(params.alpha_plus(), q, c_plus) -
                log_q_pochhammer(params.alpha_minus(), q, c_minus);
    for (int d : diffs) lg -= log_q_pochhammer(q, q, d);
    return std::exp(lg);
  }
  double den = q_pochhammer(params.alpha_plus(), q, c_plus) *
               q_pochhammer(params.alpha_minus(), q, c_minus);
  for (int d : diffs) den *= q_pochhammer(q, q, d);
  return q_pochhammer(q, q, m) / den;
}

}  // namespace

double toda_weight(const Partition& mu, const ModelParams& params) {
  const int n = mu.box().n;
  const int m = mu.box().m;
  std::vector<int> diffs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) diffs[static_cast<std::size_t>(i)] = mu.at(i) - mu.at(i + 1);
  return toda_weight_from_counts(m, m - mu.at(1), mu.at(n), diffs, params);
}

double conjugate_weight(const Partition& lambda, const ModelParams& params) {
  const int m = lambda.box().n;  // lambda has m parts
  const int n = lambda.box().m;  // each bounded by n
  std::vector<int> counts(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) counts[static_cast<std::size_t>(i)] = multiplicity(lambda, i);
  return toda_weight_from_counts(m, counts[0], counts[static_cast<std::size_t>(n)], counts,
                                 params);
}

MultinomialWeight multinomial_weight(const Partition& mu, const ModelParams& params) {
  const int n = mu.box().n;
  const int m = mu.box().m;
  const double wp = 1.0 / (1.0 - params.alpha_plus());
  const double wm = 1.0 / (1.0 - params.alpha_minus());
  const double d = (n - 1) + wp + wm;

  MultinomialWeight out;
  out.rho.resize(static_cast<std::size_t>(n) + 1, 1.0 / d);
  out.rho.front() = wp / d;
  out.rho.back() = wm / d;
  out.normalizer = std::pow(d, m);

  if (m > 20) {
    double lg = std::lgamma(m + 1.0) + (m - mu.at(1)) * std::log(wp) + mu.at(n) * std::log(wm);
    for (int i = 0; i <= n; ++i) lg -= std::lgamma(mu.at(i) - mu.at(i + 1) + 1.0);
    out.value = std::exp(lg);
    return out;
  }
  double den = 1.0;
  for (int i = 0; i <= n; ++i) den *= factorial(mu.at(i) - mu.at(i + 1));
  out.value = factorial(m) * std::pow(wp, m - mu.at(1)) * std::pow(wm, mu.at(n)) / den;
  return out;
}

WeightTable make_weight_table(WeightKind kind, const LatticeConfig& box,
                              const ModelParams& params) {
  WeightTable table;
  table.kind = kind;
  table.box = box;
  const auto basis = enumerate_partitions(box);
  table.values.reserve(basis.size());
  for (const auto& p : basis) {
    double w = 0.0;
    switch (kind) {
      case WeightKind::toda: w = toda_weight(p, params); break;
      case WeightKind::conjugate: w = conjugate_weight(p, params); break;
      case WeightKind::multinomial: w = multinomial_weight(p, params).value; break;
    }
    if (!(w > 0.0)) {
      throw std::runtime_error("nonpositive weight: parameters outside the admissible domain");
    }
    table.values.push_back(w);
  }
  return table;
}

}  // namespace qtoda
