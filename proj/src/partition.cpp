#include "prg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace prg {

int partition_size(const Partition& lambda) {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) return false;
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]) return false;
  }
  return true;
}

Partition trimmed(Partition lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

Partition padded(Partition lambda, int n) {
  lambda.resize(n, 0);
  return lambda;
}

std::vector<Partition> partitions_with_parts(int m, int max_parts) {
  if (max_parts > kMaxRank) max_parts = kMaxRank;
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Partition> partitions_of(int m) {
  if (m > kMaxRank) throw std::invalid_argument("partition size exceeds the supported rank");
  return partitions_with_parts(m, m);
}

std::vector<BorderStrip> border_strips(const Partition& lambda, int length) {
  // Beta-set (abacus) description: a border strip of size L corresponds to
  // moving one bead down by L onto an empty position; its height is the
  // number of beads jumped over.
  std::vector<BorderStrip> out;
  const Partition shape = trimmed(lambda);
  const int rows = static_cast<int>(shape.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = shape[i] + (rows - 1 - i);
  for (int i = 0; i < rows; ++i) {
    const int target = beta[i] - length;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++height;
    }
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    Partition rem;
    for (int j = 0; j < rows; ++j) rem.push_back(next[j] - (rows - 1 - j));
    out.push_back({trimmed(rem), height});
  }
  return out;
}

std::uint64_t standard_tableaux_count(const Partition& lambda) {
  const Partition shape = trimmed(lambda);
  const int n = partition_size(shape);
  // n! / prod hooks, accumulated with exact division at each step.
  std::vector<int> hooks;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      int below = 0;
      for (std::size_t l = i + 1; l < shape.size() && shape[l] > j; ++l) ++below;
      hooks.push_back(shape[i] - j + below);
    }
  }
  unsigned __int128 num = 1;
  for (int i = 2; i <= n; ++i) num *= static_cast<unsigned>(i);
  unsigned __int128 den = 1;
  for (int h : hooks) den *= static_cast<unsigned>(h);
  return static_cast<std::uint64_t>(num / den);
}

}  // namespace prg
