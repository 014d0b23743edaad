#include "prg/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace prg {

namespace {

void require_quotient(int r, int q) {
  if (q < 1 || r % q != 0) throw std::invalid_argument("q must divide r");
}

}  // namespace

int multishape_size(const MultiShape& shape) {
  int total = 0;
  for (const auto& lambda : shape) total += partition_size(lambda);
  return total;
}

long long color_weight(const MultiShape& shape) {
  long long w = 0;
  for (std::size_t j = 0; j < shape.size(); ++j) w += static_cast<long long>(j) * partition_size(shape[j]);
  return w;
}

MultiShape shift_shape(const MultiShape& shape, int amount) {
  const int r = static_cast<int>(shape.size());
  MultiShape out(r);
  for (int j = 0; j < r; ++j) out[j] = shape[residue(j + amount, r)];
  return out;
}

std::vector<MultiShape> enumerate_fer(int r, int p, int n) {
  if (r < 1 || p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  std::vector<MultiShape> out;
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int m = 0; m <= n; ++m) by_size[m] = partitions_of(m);

  std::vector<int> sizes(r, 0);
  MultiShape current(r);
  std::function<void(int)> fill = [&](int j) {
    if (j == r) {
      out.push_back(current);
      return;
    }
    for (const auto& lambda : by_size[sizes[j]]) {
      current[j] = lambda;
      fill(j + 1);
    }
  };
  std::function<void(int, int)> compose = [&](int j, int remaining) {
    if (j == r - 1) {
      sizes[j] = remaining;
      long long w = 0;
      for (int i = 0; i < r; ++i) w += static_cast<long long>(i) * sizes[i];
      if (w % p == 0) fill(0);
      return;
    }
    for (int s = remaining; s >= 0; --s) {
      sizes[j] = s;
      compose(j + 1, remaining - s);
    }
  };
  compose(0, n);
  return out;
}

ShapeClass shape_class(const MultiShape& shape, int q) {
  const int r = static_cast<int>(shape.size());
  require_quotient(r, q);
  const int step = r / q;
  ShapeClass out{shape, step, 0};
  for (int j = 0; j < q; ++j) {
    MultiShape shifted = shift_shape(shape, j * step);
    if (shifted == shape) ++out.stabilizer_order;
    if (shifted < out.representative) out.representative = std::move(shifted);
  }
  return out;
}

std::vector<ShapeClass> enumerate_fer_classes(int r, int p, int q, int n) {
  validate_params(r, p, q, n);
  std::vector<ShapeClass> out;
  for (const auto& shape : enumerate_fer(r, p, n)) {
    ShapeClass cls = shape_class(shape, q);
    if (cls.representative == shape) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_tableaux(const MultiShape& shape) {
  // multinomial(n; |lambda^(j)|) * prod f^{lambda^(j)}
  std::uint64_t result = 1;
  int placed = 0;
  for (const auto& lambda : shape) {
    const int m = partition_size(lambda);
    for (int i = 1; i <= m; ++i) {
      result = result * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
    }
    placed += m;
    result *= standard_tableaux_count(lambda);
  }
  return result;
}

std::uint64_t class_tableau_count(const ShapeClass& mu) {
  const std::uint64_t total = count_tableaux(mu.representative);
  if (total % static_cast<std::uint64_t>(mu.stabilizer_order) != 0) {
    throw std::logic_error("stabilizer does not act freely on tableaux");
  }
  return total / static_cast<std::uint64_t>(mu.stabilizer_order);
}

std::vector<MultiTableau> enumerate_tableaux(const MultiShape& shape) {
  const int r = static_cast<int>(shape.size());
  const int n = multishape_size(shape);
  std::vector<MultiTableau> out;
  MultiTableau current(r);
  for (int j = 0; j < r; ++j) current[j].resize(shape[j].size());

  // Place 1, 2, ..., n; each number goes to the end of some row whose
  // target length is not reached and whose row above is strictly longer.
  std::function<void(int)> place = [&](int value) {
    if (value > n) {
      out.push_back(current);
      return;
    }
    for (int j = 0; j < r; ++j) {
      for (std::size_t row = 0; row < shape[j].size(); ++row) {
        auto& cells = current[j][row];
        if (static_cast<int>(cells.size()) >= shape[j][row]) continue;
        if (row > 0 && current[j][row - 1].size() <= cells.size()) continue;
        cells.push_back(value);
        place(value + 1);
        cells.pop_back();
      }
    }
  };
  place(1);
  return out;
}

std::vector<MultiTableau> tableau_class_representatives(const ShapeClass& mu) {
  const int q = mu.quotient();
  std::vector<int> stabilizing;
  for (int j = 0; j < q; ++j) {
    if (shift_shape(mu.representative, j * mu.shift_amount) == mu.representative) {
      stabilizing.push_back(j);
    }
  }
  std::vector<MultiTableau> out;
  for (auto& t : enumerate_tableaux(mu.representative)) {
    bool least = true;
    for (int j : stabilizing) {
      if (shift_tableau(t, j, mu.shift_amount) < t) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(std::move(t));
  }
  return out;
}

MultiShape shape_of(const MultiTableau& t) {
  MultiShape out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (const auto& row : t[j]) {
      if (!row.empty()) out[j].push_back(static_cast<int>(row.size()));
    }
  }
  return out;
}

bool is_standard(const MultiTableau& t) {
  int n = 0;
  for (const auto& comp : t) {
    for (const auto& row : comp) n += static_cast<int>(row.size());
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& comp : t) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto& row = comp[i];
      if (row.empty()) return false;
      if (i > 0 && comp[i - 1].size() < row.size()) return false;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const int v = row[c];
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
        if (c > 0 && row[c - 1] >= v) return false;
        if (i > 0 && comp[i - 1][c] >= v) return false;
      }
    }
  }
  return true;
}

MultiTableau shift_tableau(const MultiTableau& t, int j, int step) {
  const int r = static_cast<int>(t.size());
  MultiTableau out(r);
  for (int i = 0; i < r; ++i) out[i] = t[residue(i + static_cast<long long>(j) * step, r)];
  return out;
}

MultiTableau canonical_tableau(const MultiTableau& t, int q) {
  const int r = static_cast<int>(t.size());
  require_quotient(r, q);
  MultiTableau best = t;
  for (int j = 1; j < q; ++j) {
    MultiTableau shifted = shift_tableau(t, j, r / q);
    if (shifted < best) best = std::move(shifted);
  }
  return best;
}

StatProfile tableau_stats(const MultiTableau& t, int q) {
  const int r = static_cast<int>(t.size());
  require_quotient(r, q);
  if (!is_standard(t)) throw std::invalid_argument("tableau is not standard");
  int n = 0;
  for (const auto& comp : t) {
    for (const auto& row : comp) n += static_cast<int>(row.size());
  }
  if (n > kMaxRank) throw std::invalid_argument("tableau exceeds the supported rank");
  RankVector<int> component(n, 0);
  RankVector<int> row_of(n, 0);
  for (int j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < t[j].size(); ++i) {
      for (int v : t[j][i]) {
        component[v - 1] = j;
        row_of[v - 1] = static_cast<int>(i);
      }
    }
  }
  RankVector<bool> above;
  for (int i = 0; i + 1 < n; ++i) {
    above.push_back(component[i] == component[i + 1] && row_of[i] < row_of[i + 1]);
  }
  return profile_from_descents(std::span<const bool>(above.data(), above.size()),
                               std::span<const int>(component.data(), component.size()), r,
                               r / q);
}

}  // namespace prg
