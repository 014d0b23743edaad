#include "prg/diagonal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prg/stats.hpp"

namespace prg {

KPartiteMatrix::KPartiteMatrix(int k, int n) {
  if (k < 1 || k > kMaxBlocks) throw std::invalid_argument("k out of range");
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("n out of range");
  rows.assign(k, RankVector<int>(n, 0));
}

int KPartiteMatrix::row_sum(int i) const {
  return std::accumulate(rows[i].begin(), rows[i].end(), 0);
}

int KPartiteMatrix::column_sum(int j) const {
  int s = 0;
  for (const auto& row : rows) s += row[j];
  return s;
}

int KPartiteMatrix::total() const {
  int s = 0;
  for (int i = 0; i < k(); ++i) s += row_sum(i);
  return s;
}

bool is_kpartite(const KPartiteMatrix& a) {
  const int n = a.n();
  for (const auto& row : a.rows) {
    for (int v : row) {
      if (v < 0) return false;
    }
  }
  for (int j = 0; j + 1 < n; ++j) {
    for (const auto& row : a.rows) {
      if (row[j] > row[j + 1]) break;
      if (row[j] < row[j + 1]) return false;
    }
  }
  return true;
}

bool colu_criterion(const KPartiteMatrix& a, const GroupParams& g) {
  const int n = a.n();
  if (n == 0) return true;
  const int first = residue(a.column_sum(0), g.r);
  for (int j = 0; j < n; ++j) {
    const int s = a.column_sum(j);
    if (residue(s, g.r) != first) return false;
    if (residue(static_cast<long long>(g.p) * s, g.r) != 0) return false;
  }
  return true;
}

bool in_basis_set(const KPartiteMatrix& a, const GroupParams& g) {
  if (a.n() != g.n || !is_kpartite(a)) return false;
  for (int i = 0; i < a.k(); ++i) {
    if (a.row_sum(i) % g.q != 0) return false;
  }
  return colu_criterion(a, g);
}

bool par_rpn_contains(const Partition& lambda, int r, int p, int n) {
  if (r < 1 || p < 1 || r % p != 0) throw std::invalid_argument("Par(r,p,n) needs p | r");
  if (!is_partition(lambda)) return false;
  const Partition t = trimmed(lambda);
  if (static_cast<int>(t.size()) > n) return false;
  const Partition full = padded(t, n);
  const int common = residue(full[0], r);
  if (common % (r / p) != 0) return false;
  for (int v : full) {
    if (residue(v, r) != common) return false;
  }
  return true;
}

std::vector<Partition> par_rpn_enumerate(int r, int p, int n, int degree_bound) {
  std::vector<Partition> out;
  for (int m = 0; m <= degree_bound; ++m) {
    for (const auto& lambda : partitions_with_parts(m, n)) {
      if (par_rpn_contains(lambda, r, p, n)) out.push_back(padded(lambda, n));
    }
  }
  return out;
}

namespace {

// lambda (any length, trailing zeros optional) against the profile of g.
bool compatible_with(const Partition& lambda, const Element& g, const StatProfile& prof) {
  const GroupParams& gp = g.params();
  const int n = gp.n;
  if (static_cast<int>(lambda.size()) > n) {
    for (std::size_t i = n; i < lambda.size(); ++i) {
      if (lambda[i] != 0) return false;
    }
  }
  auto part = [&](int i) { return i < static_cast<int>(lambda.size()) ? lambda[i] : 0; };
  const int step = gp.r / gp.q;
  ColorVector colors(n);
  int common = -1;
  for (int i = 0; i < n; ++i) {
    const int v = part(i);
    if (v < 0 || (i > 0 && part(i - 1) < v)) return false;
    const int diff = v - prof.lambda[i];
    if (diff < 0 || (i > 0 && part(i - 1) - prof.lambda[i - 1] < diff)) return false;
    const int res = residue(diff, gp.r);
    if (common < 0) {
      if (res % step != 0) return false;
      common = res;
    } else if (res != common) {
      return false;
    }
    colors[i] = v;
  }
  // [|g|; lambda] = g.
  return canonical_colors(colors, gp.r, step) == g.colors();
}

}  // namespace

bool is_g_compatible(const Partition& lambda, const Element& g) {
  return compatible_with(lambda, g, stat_profile(g));
}

KPartiteMatrix phi(const PhiTuple& tuple) {
  const int k = static_cast<int>(tuple.gs.size());
  if (k < 1 || k != static_cast<int>(tuple.lambdas.size())) {
    throw std::invalid_argument("phi needs k elements and k partitions");
  }
  const GroupParams& gp = tuple.gs[0].params();
  const int n = gp.n;
  KPartiteMatrix out(k, n);
  // tau = sigma_1 ... sigma_{i-1}; column sums accumulate the colors of the
  // product of the liftings [sigma_i; lambda^(i)].
  Permutation tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  RankVector<long long> column(n, 0);
  for (int i = 0; i < k; ++i) {
    const Element& g = tuple.gs[i];
    if (!(g.params() == gp)) throw std::invalid_argument("elements of different groups");
    const Partition& lambda = tuple.lambdas[i];
    if (!compatible_with(lambda, g, stat_profile(g))) {
      throw std::invalid_argument("partition " + std::to_string(i + 1) + " is not compatible");
    }
    for (int j = 0; j < n; ++j) {
      const int v = tau[j] < static_cast<int>(lambda.size()) ? lambda[tau[j]] : 0;
      out.rows[i][j] = v;
      column[j] += v;
      tau[j] = g.sigma()[tau[j]];
    }
  }
  // The product is 1 in G iff tau is the identity and the colors form a
  // scalar of the quotient.
  const int step = gp.r / gp.q;
  bool one = true;
  for (int j = 0; j < n && one; ++j) {
    one = tau[j] == j && residue(column[j] - column[0], gp.r) == 0 &&
          residue(column[j], step) == 0;
  }
  if (!one) throw std::invalid_argument("the elements do not multiply to 1");
  return out;
}

PhiTuple phi_inverse(const KPartiteMatrix& a, const GroupParams& g) {
  if (!in_basis_set(a, g)) throw std::invalid_argument("matrix is not in B_k");
  const GroupParams dual = dual_params(g);
  const int k = a.k();
  const int n = a.n();

  // Row i orders the columns by (a[i][j] descending, position in row i+1's
  // order ascending); the order after the last row is the identity.
  BlockVector<Permutation> sigmas(k);
  BlockVector<Partition> lambdas(k);
  RankVector<int> next_rank(n);
  std::iota(next_rank.begin(), next_rank.end(), 0);
  for (int i = k - 1; i >= 0; --i) {
    const auto& row = a.rows[i];
    RankVector<int> order;
    for (int j = 0; j < n; ++j) {
      auto before = [&](int x, int y) {
        if (row[x] != row[y]) return row[x] > row[y];
        return next_rank[x] < next_rank[y];
      };
      auto pos = order.end();
      while (pos != order.begin() && before(j, *(pos - 1))) --pos;
      order.insert(pos, j);
    }
    Permutation sigma(n);
    Partition lambda(n);
    RankVector<int> rank(n);
    for (int x = 0; x < n; ++x) {
      rank[order[x]] = x;
      lambda[x] = row[order[x]];
      sigma[x] = next_rank[order[x]];
    }
    sigmas[i] = sigma;
    lambdas[i] = lambda;
    next_rank = rank;
  }

  PhiTuple out;
  for (int i = 0; i < k; ++i) {
    ColorVector colors(lambdas[i].begin(), lambdas[i].end());
    out.gs.push_back(canonicalize(sigmas[i], colors, dual));
    out.lambdas.push_back(lambdas[i]);
  }
  return out;
}

void for_each_kpartite(int k, int n, int max_entry, std::optional<int> max_total,
                       const std::function<void(const KPartiteMatrix&)>& visit) {
  if (max_entry < 0) return;
  KPartiteMatrix current(k, n);
  // Columns in decreasing lexicographic order, with their sums.
  std::vector<RankVector<int>> columns;
  std::vector<int> sums;
  RankVector<int> col(k, max_entry);
  while (true) {
    const int s = std::accumulate(col.begin(), col.end(), 0);
    if (!max_total || s <= *max_total) {
      columns.push_back(col);
      sums.push_back(s);
    }
    int i = k - 1;
    while (i >= 0 && col[i] == 0) col[i--] = max_entry;
    if (i < 0) break;
    --col[i];
  }
  const int budget = max_total ? *max_total : -1;
  std::function<void(int, std::size_t, int)> rec = [&](int j, std::size_t from, int total) {
    if (j == n) {
      visit(current);
      return;
    }
    for (std::size_t c = from; c < columns.size(); ++c) {
      if (budget >= 0 && total + sums[c] > budget) continue;
      for (int i = 0; i < k; ++i) current.rows[i][j] = columns[c][i];
      rec(j + 1, c, total + sums[c]);
    }
  };
  rec(0, 0, 0);
}

AverageResult average_monomial(const KPartiteMatrix& a, const GroupParams& g,
                               std::uint64_t cap) {
  if (a.n() != g.n) throw std::invalid_argument("matrix width differs from n");
  for (int i = 0; i < a.k(); ++i) {
    if (a.row_sum(i) % g.q != 0) throw std::invalid_argument("row sums must be 0 mod q");
  }
  const int n = g.n;
  const int r = g.r;
  RankVector<int> s(n);
  for (int j = 0; j < n; ++j) s[j] = a.column_sum(j);

  std::map<Permutation, std::vector<std::int64_t>> acc;
  for_each_element(g, [&](const Element& e) {
    long long exponent = 0;
    for (int j = 0; j < n; ++j) exponent += static_cast<long long>(e.colors()[j]) * s[j];
    auto [it, fresh] = acc.try_emplace(e.sigma());
    if (fresh) it->second.assign(r, 0);
    ++it->second[residue(exponent, r)];
  }, cap);

  AverageResult out;
  for (const auto& [sigma, powers] : acc) {
    KPartiteMatrix image(a.k(), n);
    for (int i = 0; i < a.k(); ++i) {
      for (int j = 0; j < n; ++j) image.rows[i][sigma[j]] = a.rows[i][j];
    }
    auto it = out.terms.try_emplace(image, Cyclotomic(r)).first;
    it->second += Cyclotomic::from_powers(r, powers);
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
  out.nonzero = !out.terms.empty();
  return out;
}

namespace {

MultiExponent sorted_rows(const KPartiteMatrix& a) {
  MultiExponent out;
  for (const auto& row : a.rows) {
    Partition lambda(row.begin(), row.end());
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    out.push_back(lambda);
  }
  return out;
}

}  // namespace

PartitionSeries hilb_diag(const GroupParams& g, int k, int degree_bound) {
  PartitionSeries out(k, g.n, degree_bound);
  for_each_kpartite(k, g.n, degree_bound, degree_bound, [&](const KPartiteMatrix& a) {
    if (in_basis_set(a, g)) out.add(sorted_rows(a), 1);
  });
  return out;
}

PartitionSeries hilb_tensor(const GroupParams& g, int k, int degree_bound) {
  PartitionSeries factor(1, g.n, degree_bound);
  for (const auto& lambda : par_rpn_enumerate(g.r, g.p, g.n, degree_bound)) {
    if (partition_size(lambda) % g.q == 0) factor.add({lambda}, 1);
  }
  return PartitionSeries::tensor(std::vector<PartitionSeries>(k, factor), degree_bound);
}

PartitionSeries uou_rhs(const GroupParams& g, int k, std::optional<int> degree_bound,
                        std::uint64_t cap) {
  const std::vector<Element> elements = enumerate_group(dual_params(g), cap);
  std::vector<Partition> lambdas;
  for (const auto& e : elements) lambdas.push_back(stat_profile(e).lambda);
  PartitionSeries out(k, g.n, degree_bound);
  for_each_product_one_tuple(elements, k, [&](const std::vector<int>& tuple) {
    MultiExponent exps;
    for (int i : tuple) exps.push_back(lambdas[i]);
    out.add(exps, 1);
  });
  return out;
}

UouResult uou_check(const GroupParams& g, int k, int degree_bound, std::uint64_t cap) {
  UouResult out{false, hilb_diag(g, k, degree_bound),
                uou_rhs(g, k, degree_bound, cap) * hilb_tensor(g, k, degree_bound),
                std::nullopt};
  out.witness = PartitionSeries::first_difference(out.diag, out.product);
  out.equal = !out.witness.has_value();
  return out;
}

std::uint64_t count_basis(const GroupParams& g, int k, std::uint64_t cap) {
  const std::vector<Element> elements = enumerate_group(dual_params(g), cap);
  std::uint64_t count = 0;
  for_each_product_one_tuple(elements, k, [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace prg
