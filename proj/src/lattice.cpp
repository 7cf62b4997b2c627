#include "qtoda/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtoda {

void validate(const LatticeConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1) {
    throw std::invalid_argument("lattice config requires n >= 1 and m >= 1");
  }
}

std::size_t lattice_dimension(const LatticeConfig& cfg) {
  validate(cfg);
  // binomial(n+m, n) without intermediate overflow at desk scale
  std::size_t r = 1;
  for (int k = 1; k <= cfg.n; ++k) {
    r = r * static_cast<std::size_t>(cfg.m + k) / static_cast<std::size_t>(k);
  }
  return r;
}

Partition::Partition(std::vector<int> parts, LatticeConfig box)
    : parts_(std::move(parts)), box_(box) {
  validate(box_);
  if (static_cast<int>(parts_.size()) != box_.n) {
    throw std::invalid_argument("partition has " + std::to_string(parts_.size()) +
                                " parts, expected " + std::to_string(box_.n));
  }
  int prev = box_.m;
  for (int p : parts_) {
    if (p < 0 || p > prev) {
      throw std::invalid_argument("parts must satisfy m >= mu_1 >= ... >= mu_n >= 0");
    }
    prev = p;
  }
}

int Partition::at(int i) const {
  if (i == 0) return box_.m;
  if (i == box_.n + 1) return 0;
  if (i < 0 || i > box_.n + 1) {
    throw std::out_of_range("partition index out of range");
  }
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

void enumerate_rec(const LatticeConfig& cfg, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (static_cast<int>(prefix.size()) == cfg.n) {
    out.emplace_back(prefix, cfg);
    return;
  }
  const int hi = prefix.empty() ? cfg.m : prefix.back();
  for (int v = 0; v <= hi; ++v) {
    prefix.push_back(v);
    enumerate_rec(cfg, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const LatticeConfig& cfg) {
  validate(cfg);
  std::vector<Partition> out;
  out.reserve(lattice_dimension(cfg));
  std::vector<int> prefix;
  enumerate_rec(cfg, prefix, out);
  return out;
}

Partition conjugate(const Partition& mu) {
  const LatticeConfig box = mu.box();
  std::vector<int> parts(static_cast<std::size_t>(box.m));
  for (int j = 1; j <= box.m; ++j) {
    int count = 0;
    for (int p : mu.parts()) {
      if (p >= j) ++count;
    }
    parts[static_cast<std::size_t>(j - 1)] = count;
  }
  return Partition(std::move(parts), conjugate_box(box));
}

int multiplicity(const Partition& lambda, int value) {
  if (value < 0 || value > lambda.box().m) {
    throw std::out_of_range("multiplicity value outside 0..n");
  }
  return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), value));
}

std::ptrdiff_t partition_index(const std::vector<Partition>& basis,
                               const std::vector<int>& parts) {
  auto it = std::lower_bound(basis.begin(), basis.end(), parts,
                             [](const Partition& p, const std::vector<int>& v) {
                               return p.parts() < v;
                             });
  if (it == basis.end() || it->parts() != parts) return -1;
  return it - basis.begin();
}

}  // namespace qtoda
