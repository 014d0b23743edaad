#include "prg/characters.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace prg {

CycleType cycle_type(const Permutation& sigma, const ColorVector& colors, int r) {
  const int n = static_cast<int>(sigma.size());
  CycleType out;
  RankVector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    long long color = 0;
    for (int i = start; !seen[i]; i = sigma[i]) {
      seen[i] = true;
      ++len;
      color += colors[i];
    }
    out.emplace_back(len, residue(color, r));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

CycleType cycle_type(const Element& g) {
  return cycle_type(g.sigma(), g.colors(), g.params().r);
}

CharacterEngine::CharacterEngine(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("character modulus must be positive");
}

Cyclotomic CharacterEngine::value(const MultiShape& shape, const CycleType& type) {
  if (static_cast<int>(shape.size()) != r_) {
    throw std::invalid_argument("shape tuple length differs from the modulus");
  }
  int cells = multishape_size(shape);
  int total = 0;
  for (const auto& [len, color] : type) {
    if (len < 1 || color < 0 || color >= r_) throw std::invalid_argument("malformed cycle type");
    total += len;
  }
  if (cells != total) throw std::invalid_argument("shape size differs from the cycle type size");
  CycleType sorted = type;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  MultiShape clean;
  for (const auto& lambda : shape) clean.push_back(trimmed(lambda));
  return eval(clean, sorted, 0);
}

Cyclotomic CharacterEngine::eval(const MultiShape& shape, const CycleType& type,
                                 std::size_t from) {
  if (from == type.size()) return Cyclotomic::integer(r_, 1);
  auto key = std::make_pair(shape, CycleType(type.begin() + from, type.end()));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto [len, color] = type[from];
  Cyclotomic total(r_);
  for (int j = 0; j < r_; ++j) {
    if (partition_size(shape[j]) < len) continue;
    Cyclotomic part(r_);
    for (const auto& strip : border_strips(shape[j], len)) {
      MultiShape smaller = shape;
      smaller[j] = strip.remainder;
      Cyclotomic sub = eval(smaller, type, from + 1);
      if (strip.height % 2) part -= sub;
      else part += sub;
    }
    if (!part.is_zero()) total += part.times_zeta_power(static_cast<long long>(j) * color);
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Cyclotomic wreath_character(const MultiShape& shape, const CycleType& type) {
  thread_local std::map<int, std::unique_ptr<CharacterEngine>> engines;
  const int r = static_cast<int>(shape.size());
  auto& engine = engines[r];
  if (!engine) engine = std::make_unique<CharacterEngine>(r);
  return engine->value(shape, type);
}

std::vector<CycleClass> cycle_classes(int r, int p, int n, std::uint64_t cap) {
  const GroupParams params = validate_params(r, p, 1, n);
  std::map<CycleType, std::uint64_t> counts;
  for_each_element(params, [&](const Element& g) { ++counts[cycle_type(g)]; }, cap);
  std::vector<CycleClass> out;
  for (auto& [type, size] : counts) out.push_back({type, size});
  return out;
}

KroneckerTable::KroneckerTable(const GroupParams& h, std::vector<ShapeClass> classes,
                               std::uint64_t cap)
    : h_(validate_params(h.r, h.p, h.q, h.n)), classes_(std::move(classes)) {
  const int step = h_.r / h_.p;
  for (const auto& mu : classes_) {
    if (mu.modulus() != h_.r || mu.shift_amount != step) {
      throw std::invalid_argument("shape class is not taken modulo the shift by r/p");
    }
    if (multishape_size(mu.representative) != h_.n) {
      throw std::invalid_argument("shape class has the wrong size");
    }
    if (color_weight(mu.representative) % h_.q != 0) {
      throw std::invalid_argument("shape class is not trivial on the scalar quotient");
    }
  }
  cycle_classes_ = cycle_classes(h_.r, h_.p, h_.n, cap);
  CharacterEngine engine(h_.r);
  values_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (const auto& cc : cycle_classes_) {
      values_[i].push_back(engine.value(classes_[i].representative, cc.type));
    }
  }
}

std::int64_t KroneckerTable::coefficient(const std::vector<int>& indices) const {
  if (indices.empty()) throw std::invalid_argument("no shape classes given");
  Cyclotomic sum(h_.r);
  for (std::size_t c = 0; c < cycle_classes_.size(); ++c) {
    Cyclotomic prod = values_.at(indices[0])[c];
    for (std::size_t i = 1; i < indices.size(); ++i) prod = prod * values_.at(indices[i])[c];
    sum += prod * static_cast<std::int64_t>(cycle_classes_[c].size);
  }
  // |G(r,a,n)| = r^n n! / a.
  const std::uint64_t cover = h_.cover_order();
  const std::int64_t total = sum.as_integer();
  if (total < 0 || total % static_cast<std::int64_t>(cover) != 0) {
    throw std::domain_error("coarse Kronecker average is not a non-negative integer");
  }
  return total / static_cast<std::int64_t>(cover);
}

std::int64_t coarse_kronecker(const GroupParams& h, const std::vector<ShapeClass>& mus,
                              std::uint64_t cap) {
  KroneckerTable table(h, mus, cap);
  std::vector<int> idx(mus.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return table.coefficient(idx);
}

PartitionSeries fake_degree_poly(const ShapeClass& mu) {
  const int n = multishape_size(mu.representative);
  PartitionSeries out(1, n);
  for (const auto& t : tableau_class_representatives(mu)) {
    out.add({tableau_stats(t, mu.quotient()).lambda}, 1);
  }
  return out;
}

MaincombResult maincomb_check(const GroupParams& g, int k, std::optional<int> degree_bound,
                              std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const GroupParams params = validate_params(g.r, g.p, g.q, g.n);
  const int n = params.n;

  const std::vector<Element> elements = enumerate_group(params, cap);
  std::vector<Partition> lambdas;
  for (const auto& e : elements) lambdas.push_back(stat_profile(e).lambda);

  MaincombResult out{false, PartitionSeries(k, n, degree_bound), PartitionSeries(k, n, degree_bound),
                     std::nullopt};
  for_each_product_one_tuple(elements, k, [&](const std::vector<int>& tuple) {
    MultiExponent exps;
    for (int i : tuple) exps.push_back(lambdas[i]);
    out.lhs.add(exps, 1);
  });

  const auto classes = enumerate_fer_classes(params.r, params.p, params.q, n);
  std::vector<PartitionSeries> fakes;
  for (const auto& mu : classes) fakes.push_back(fake_degree_poly(mu));
  KroneckerTable table(dual_params(params), classes, cap);

  std::vector<int> idx(k, 0);
  const int m = static_cast<int>(classes.size());
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      const std::int64_t c = table.coefficient(idx);
      if (c == 0) return;
      std::vector<PartitionSeries> factors;
      for (int i : idx) factors.push_back(fakes[i]);
      const PartitionSeries product = PartitionSeries::tensor(factors, degree_bound);
      for (const auto& [exps, coef] : product.terms()) out.rhs.add(exps, coef * c);
      return;
    }
    for (int i = 0; i < m; ++i) {
      idx[depth] = i;
      rec(depth + 1);
    }
  };
  rec(0);

  out.witness = PartitionSeries::first_difference(out.lhs, out.rhs);
  out.equal = !out.witness.has_value();
  return out;
}

}  // namespace prg
