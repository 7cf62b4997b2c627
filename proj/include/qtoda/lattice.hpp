#pragma once

#include <cstddef>
#include <vector>

namespace qtoda {

/// Box of the configuration space Lambda^(n,m): weakly decreasing n-tuples
/// with entries in {0,...,m}.
struct LatticeConfig {
  int n = 1;  ///< number of parts (particles)
  int m = 1;  ///< largest admissible part (lattice sites 0..m)

  bool operator==(const LatticeConfig&) const = default;
};

void validate(const LatticeConfig& cfg);

/// Conjugate box: partitions with m parts bounded by n.
inline LatticeConfig conjugate_box(const LatticeConfig& cfg) { return {cfg.m, cfg.n}; }

std::size_t lattice_dimension(const LatticeConfig& cfg);  // binomial(n+m, n)

/// A point of Lambda^(n,m).  Carries its box so conjugation and the
/// boundary conventions mu_0 = m, mu_{n+1} = 0 are total.
class Partition {
 public:
  Partition(std::vector<int> parts, LatticeConfig box);

  const std::vector<int>& parts() const { return parts_; }
  const LatticeConfig& box() const { return box_; }

  /// 1-based access with the boundary conventions: at(0) = m, at(n+1) = 0.
  int at(int i) const;

  int sum() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

 private:
  std::vector<int> parts_;
  LatticeConfig box_;
};

/// All of Lambda^(n,m) exactly once, in ascending lexicographic order
/// (starts at (0,...,0), ends at (m,...,m)).
std::vector<Partition> enumerate_partitions(const LatticeConfig& cfg);

/// Conjugate partition: the unique lambda in Lambda^(m,n) whose multiplicity
/// of i equals mu_i - mu_{i+1} for i = 0..n.  Involution.
Partition conjugate(const Partition& mu);

/// Number of parts of lambda equal to value, 0 <= value <= lambda.box().m.
int multiplicity(const Partition& lambda, int value);

/// Index of p in the ascending-lex enumeration, or -1 if p is not a member.
std::ptrdiff_t partition_index(const std::vector<Partition>& basis, const std::vector<int>& parts);

}  // namespace qtoda
