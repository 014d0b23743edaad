#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms beyond plain data types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

// S_n character via the Frobenius formula: the coefficient of
// x^{lambda + delta} in a_delta * prod_i p_{rho_i}.
inline long long frobenius_character(const std::vector<int>& lambda, const std::vector<int>& rho) {
  const int n = static_cast<int>(lambda.size());
  using Mono = std::vector<int>;
  std::map<Mono, long long> poly;
  // Vandermonde: sum over permutations of sign * x^{pi(delta)}.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Mono m(n);
    for (int i = 0; i < n; ++i) m[i] = n - 1 - perm[i];
    poly[m] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int part : rho) {
    std::map<Mono, long long> next;
    for (const auto& [m, c] : poly) {
      for (int v = 0; v < n; ++v) {
        Mono m2 = m;
        m2[v] += part;
        next[m2] += c;
      }
    }
    poly = std::move(next);
  }
  Mono target(n);
  for (int i = 0; i < n; ++i) target[i] = lambda[i] + n - 1 - i;
  auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

inline std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  }
  return out;
}

// Monomial matrix of [sigma; c] acting by e_i -> zeta^{c_i} e_{sigma(i)}.
using CMatrix = std::vector<std::vector<std::complex<double>>>;

inline CMatrix monomial_matrix(const std::vector<int>& sigma, const std::vector<int>& colors, int r) {
  const int n = static_cast<int>(sigma.size());
  CMatrix m(n, std::vector<std::complex<double>>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    m[sigma[i]][i] = std::polar(1.0, 2 * std::numbers::pi * colors[i] / r);
  }
  return m;
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.size();
  CMatrix c(n, std::vector<std::complex<double>>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Equality up to a scalar zeta^s with (r/q) | s.
inline bool equal_mod_scalars(const CMatrix& a, const CMatrix& b, int r, int q) {
  for (int s = 0; s < r; s += r / q) {
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * s / r);
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i)
      for (std::size_t j = 0; j < a.size() && same; ++j)
        same = std::abs(a[i][j] - z * b[i][j]) < 1e-9;
    if (same) return true;
  }
  return false;
}

// Coefficients of prod over i of [m_i]_t.
inline std::vector<long long> q_integer_product(const std::vector<int>& ms) {
  std::vector<long long> poly{1};
  for (int m : ms) {
    std::vector<long long> next(poly.size() + m - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int j = 0; j < m; ++j) next[i + j] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace oracle
