#include "prg/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prg {

int total_degree(const MultiExponent& exps) {
  int d = 0;
  for (const auto& lambda : exps) d += partition_size(lambda);
  return d;
}

std::string format_exponent(const MultiExponent& exps) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < exps[i].size(); ++j) {
      if (j) os << ",";
      os << exps[i][j];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

PartitionSeries::PartitionSeries(int blocks, int rank, std::optional<int> degree_bound)
    : blocks_(blocks), rank_(rank), bound_(degree_bound) {}

void PartitionSeries::add(const MultiExponent& exps, std::int64_t coef) {
  if (static_cast<int>(exps.size()) != blocks_) {
    throw std::invalid_argument("exponent has the wrong number of blocks");
  }
  if (coef == 0) return;
  if (bound_ && total_degree(exps) > *bound_) return;
  MultiExponent key = exps;
  for (auto& lambda : key) {
    if (static_cast<int>(trimmed(lambda).size()) > rank_) {
      throw std::invalid_argument("exponent partition has more parts than the rank");
    }
    lambda = padded(lambda, rank_);
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void PartitionSeries::add(const PartitionSeries& other) {
  for (const auto& [exps, coef] : other.terms_) add(exps, coef);
}

PartitionSeries PartitionSeries::operator*(const PartitionSeries& other) const {
  if (blocks_ != other.blocks_ || rank_ != other.rank_) {
    throw std::invalid_argument("series shapes differ");
  }
  std::optional<int> bound = bound_;
  if (other.bound_) bound = bound ? std::min(*bound, *other.bound_) : other.bound_;
  PartitionSeries out(blocks_, rank_, bound);
  for (const auto& [ea, ca] : terms_) {
    const int da = total_degree(ea);
    if (bound && da > *bound) continue;
    for (const auto& [eb, cb] : other.terms_) {
      if (bound && da + total_degree(eb) > *bound) continue;
      MultiExponent sum = ea;
      for (int i = 0; i < blocks_; ++i) {
        for (int j = 0; j < rank_; ++j) sum[i][j] += eb[i][j];
      }
      out.add(sum, ca * cb);
    }
  }
  return out;
}

PartitionSeries PartitionSeries::tensor(const std::vector<PartitionSeries>& factors,
                                        std::optional<int> degree_bound) {
  if (factors.empty()) throw std::invalid_argument("tensor of no factors");
  const int k = static_cast<int>(factors.size());
  const int n = factors.front().rank();
  PartitionSeries out(k, n, degree_bound);
  MultiExponent zero(k, Partition(n, 0));
  out.add(zero, 1);
  for (int i = 0; i < k; ++i) {
    if (factors[i].blocks() != 1 || factors[i].rank() != n) {
      throw std::invalid_argument("tensor factors must be one-block series of equal rank");
    }
    PartitionSeries lifted(k, n, degree_bound);
    for (const auto& [exps, coef] : factors[i].terms()) {
      MultiExponent e = zero;
      e[i] = exps[0];
      lifted.add(e, coef);
    }
    out = out * lifted;
  }
  return out;
}

PartitionSeries PartitionSeries::truncated(int bound) const {
  PartitionSeries out(blocks_, rank_, bound);
  for (const auto& [exps, coef] : terms_) out.add(exps, coef);
  return out;
}

std::map<std::vector<int>, std::int64_t> PartitionSeries::collapse_total_degree() const {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [exps, coef] : terms_) {
    std::vector<int> degs;
    for (const auto& lambda : exps) degs.push_back(partition_size(lambda));
    out[degs] += coef;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t PartitionSeries::evaluate_at_one() const {
  std::int64_t total = 0;
  for (const auto& [exps, coef] : terms_) total += coef;
  return total;
}

std::optional<std::string> PartitionSeries::first_difference(const PartitionSeries& a,
                                                             const PartitionSeries& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  auto describe = [](const MultiExponent& e, std::int64_t ca, std::int64_t cb) {
    std::ostringstream os;
    os << "exps " << format_exponent(e) << ": " << ca << " vs " << cb;
    return os.str();
  };
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      return describe(ia->first, ia->second, 0);
    }
    if (ia == a.terms_.end() || ib->first < ia->first) {
      return describe(ib->first, 0, ib->second);
    }
    if (ia->second != ib->second) return describe(ia->first, ia->second, ib->second);
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace prg
