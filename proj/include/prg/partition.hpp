#pragma once

#include <vector>

#include "prg/group.hpp"

namespace prg {

/// Weakly decreasing parts. Shapes are kept without trailing zeros;
/// exponent partitions are padded to length n.
using Partition = RankVector<int>;

int partition_size(const Partition& lambda);
bool is_partition(const Partition& lambda);
Partition trimmed(Partition lambda);
Partition padded(Partition lambda, int n);

/// Partitions of m with at most max_parts (<= kMaxRank) parts, same order
/// as partitions_of.
std::vector<Partition> partitions_with_parts(int m, int max_parts);

/// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);

struct BorderStrip {
  Partition remainder;
  int height = 0;  // number of rows spanned minus one
};

/// Every border strip (rim hook) of the given length removable from lambda.
std::vector<BorderStrip> border_strips(const Partition& lambda, int length);

/// Number of standard Young tableaux of shape lambda (hook length formula).
std::uint64_t standard_tableaux_count(const Partition& lambda);

}  // namespace prg
