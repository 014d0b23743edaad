#pragma once

// Generating polynomials graded by k-tuples of partitions (multipartition
// degree). Y_i^lambda stands for prod_j y_{i,j}^{lambda_j}, so multiplying
// two monomials adds exponent partitions entrywise.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prg/partition.hpp"
#include "prg/stats.hpp"

namespace prg {

/// One padded length-n partition per block.
using MultiExponent = std::vector<Partition>;

class PartitionSeries {
 public:
  PartitionSeries(int blocks, int rank, std::optional<int> degree_bound = std::nullopt);

  int blocks() const { return blocks_; }
  int rank() const { return rank_; }
  const std::optional<int>& degree_bound() const { return bound_; }
  const std::map<MultiExponent, std::int64_t>& terms() const { return terms_; }

  /// Adds coef * Y^exps unless its total degree exceeds the bound.
  void add(const MultiExponent& exps, std::int64_t coef);
  void add(const PartitionSeries& other);

  /// Product truncated at the tighter of the two bounds.
  PartitionSeries operator*(const PartitionSeries& other) const;

  /// Product of a one-block series per factor, in block order.
  static PartitionSeries tensor(const std::vector<PartitionSeries>& factors,
                                std::optional<int> degree_bound = std::nullopt);

  /// Drops terms above `bound` (total degree).
  PartitionSeries truncated(int bound) const;

  /// Substitutes y_{i,j} := y_i: exponent vector of block degrees.
  std::map<std::vector<int>, std::int64_t> collapse_total_degree() const;

  /// The value at Y = (1,...,1).
  std::int64_t evaluate_at_one() const;

  friend bool operator==(const PartitionSeries& a, const PartitionSeries& b) {
    return a.blocks_ == b.blocks_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// First exponent (in sorted order) where the two series differ.
  static std::optional<std::string> first_difference(const PartitionSeries& a,
                                                      const PartitionSeries& b);

 private:
  int blocks_;
  int rank_;
  std::optional<int> bound_;
  std::map<MultiExponent, std::int64_t> terms_;
};

int total_degree(const MultiExponent& exps);
std::string format_exponent(const MultiExponent& exps);

}  // namespace prg
