#include "qtoda/hamiltonian.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qtoda {

namespace {

double int_pow(double q, int l) {
  // l >= 0 always (valid hops keep the exponents nonnegative)
  double r = 1.0;
  for (int k = 0; k < l; ++k) r *= q;
  return r;
}

template <typename Diagonal, typename UpCoeff, typename DownCoeff>
LatticeOperator assemble(const LatticeConfig& cfg, WeightTable weight, Diagonal diag,
                         UpCoeff up, DownCoeff down) {
  LatticeOperator op;
  op.cfg = cfg;
  op.basis = enumerate_partitions(cfg);
  op.weight = std::move(weight);
  const std::size_t dim = op.basis.size();
  op.matrix.assign(dim * dim, 0.0);

  for (std::size_t r = 0; r < dim; ++r) {
    const Partition& mu = op.basis[r];
    op.entry(r, r) = diag(mu);
    for (int i = 1; i <= cfg.n; ++i) {
      if (mu.at(i) < mu.at(i - 1)) {  // mu + e_i stays in the lattice
        auto parts = mu.parts();
        parts[static_cast<std::size_t>(i - 1)] += 1;
        const auto c = partition_index(op.basis, parts);
        op.entry(r, static_cast<std::size_t>(c)) += up(mu, i);
      }
      if (mu.at(i) > mu.at(i + 1)) {  // mu - e_i stays in the lattice
        auto parts = mu.parts();
        parts[static_cast<std::size_t>(i - 1)] -= 1;
        const auto c = partition_index(op.basis, parts);
        op.entry(r, static_cast<std::size_t>(c)) += down(mu, i);
      }
    }
  }
  return op;
}

}  // namespace

LatticeOperator build_toda(const LatticeConfig& cfg, const ModelParams& params) {
  validate(cfg);
  const double q = params.q;
  const double ap = params.alpha_plus();
  const double am = params.alpha_minus();
  const double bp = params.beta_plus();
  const double bm = params.beta_minus();
  const int m = cfg.m, n = cfg.n;

  return assemble(
      cfg, make_weight_table(WeightKind::toda, cfg, params),
      [&](const Partition& mu) {
        return bp * (1.0 - int_pow(q, m - mu.at(1))) + bm * (1.0 - int_pow(q, mu.at(n)));
      },
      [&](const Partition& mu, int i) {
        double c = 1.0 - int_pow(q, mu.at(i - 1) - mu.at(i));
        if (i == 1) c *= 1.0 - ap * int_pow(q, m - mu.at(1) - 1);
        return c;
      },
      [&](const Partition& mu, int i) {
        double c = 1.0 - int_pow(q, mu.at(i) - mu.at(i + 1));
        if (i == n) c *= 1.0 - am * int_pow(q, mu.at(n) - 1);
        return c;
      });
}

LatticeOperator build_toda_q1(const LatticeConfig& cfg, const ModelParams& params) {
  validate(cfg);
  const double ap = params.alpha_plus();
  const double am = params.alpha_minus();
  const double bp = params.beta_plus();
  const double bm = params.beta_minus();
  const int m = cfg.m, n = cfg.n;

  return assemble(
      cfg, make_weight_table(WeightKind::multinomial, cfg, params),
      [&](const Partition& mu) { return bp * (m - mu.at(1)) + bm * mu.at(n); },
      [&](const Partition& mu, int i) {
        double c = mu.at(i - 1) - mu.at(i);
        if (i == 1) c *= 1.0 - ap;
        return c;
      },
      [&](const Partition& mu, int i) {
        double c = mu.at(i) - mu.at(i + 1);
        if (i == n) c *= 1.0 - am;
        return c;
      });
}

double inner_product(std::span<const double> psi, std::span<const double> phi,
                     const WeightTable& w) {
  if (psi.size() != phi.size() || psi.size() != w.values.size()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) s += psi[i] * phi[i] * w.values[i];
  return s;
}

double check_self_adjoint(const LatticeOperator& op) {
  const std::size_t dim = op.dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) {
      const double asym =
          std::abs(op.weight.values[r] * op.entry(r, c) - op.weight.values[c] * op.entry(c, r));
      worst = std::max(worst, asym);
    }
  }
  return worst;
}

std::vector<double> symmetrized(const LatticeOperator& op) {
  const std::size_t dim = op.dim();
  std::vector<double> root(dim);
  for (std::size_t i = 0; i < dim; ++i) root[i] = std::sqrt(op.weight.values[i]);
  std::vector<double> s(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      s[r * dim + c] = root[r] * op.entry(r, c) / root[c];
    }
  }
  return s;
}

std::vector<double> apply_operator(const LatticeOperator& op, std::span<const double> x) {
  const std::size_t dim = op.dim();
  if (x.size() != dim) throw std::invalid_argument("apply_operator: dimension mismatch");
  std::vector<double> y(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < dim; ++c) acc += op.entry(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

void write_matrix_csv(std::ostream& os, const LatticeOperator& op) {
  os << "# dense operator on Lambda^(" << op.cfg.n << "," << op.cfg.m
     << "), row-major; rows/columns follow the ascending lexicographic partition order;"
     << " entry (r,c) = coefficient of psi(mu_c) in (H psi)(mu_r)\n";
  char buf[32];
  for (std::size_t r = 0; r < op.dim(); ++r) {
    for (std::size_t c = 0; c < op.dim(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", op.entry(r, c));
      os << buf << (c + 1 == op.dim() ? "\n" : ",");
    }
  }
}

}  // namespace qtoda
