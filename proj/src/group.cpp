#include "prg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace prg {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::int64_t>::max() / b) {
    throw std::overflow_error("group order overflows 63 bits");
  }
  return a * b;
}

void require_same_params(const Element& a, const Element& b) {
  if (!(a.params() == b.params())) {
    throw std::invalid_argument("elements belong to different groups");
  }
}

bool is_permutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  RankVector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::uint64_t default_enumeration_cap() {
  if (const char* env = std::getenv("PRG_ENUMERATION_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

std::uint64_t GroupParams::cover_order() const {
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) result = checked_mul(result, static_cast<std::uint64_t>(r));
  for (int i = 2; i <= n; ++i) result = checked_mul(result, static_cast<std::uint64_t>(i));
  return result / static_cast<std::uint64_t>(p);
}

std::uint64_t GroupParams::order() const {
  return cover_order() / static_cast<std::uint64_t>(q);
}

GroupParams validate_params(int r, int p, int q, int n) {
  if (r < 1 || p < 1 || q < 1 || n < 1) {
    throw std::invalid_argument("r, p, q, n must all be positive");
  }
  if (n > kMaxRank) {
    throw std::invalid_argument("n exceeds the supported rank " + std::to_string(kMaxRank));
  }
  if (r % p != 0) throw std::invalid_argument("p must divide r");
  if (r % q != 0) throw std::invalid_argument("q must divide r");
  if ((static_cast<long long>(r) * n) % (static_cast<long long>(p) * q) != 0) {
    throw std::invalid_argument("pq must divide rn");
  }
  return GroupParams{r, p, q, n};
}

GroupParams dual_params(const GroupParams& params) {
  return GroupParams{params.r, params.q, params.p, params.n};
}

int scalar_count(const GroupParams& params) {
  const long long rn_pq = static_cast<long long>(params.r) * params.n / (params.p * params.q);
  return static_cast<int>(std::gcd(rn_pq, static_cast<long long>(params.r / params.q)));
}

bool is_isomorphic_to_dual(const GroupParams& params) {
  if (params.n == 2) {
    throw std::invalid_argument(
        "the scalar-count criterion does not decide isomorphism for n = 2");
  }
  const long long rn_pq = static_cast<long long>(params.r) * params.n / (params.p * params.q);
  return std::gcd(rn_pq, static_cast<long long>(params.r / params.q)) ==
         std::gcd(rn_pq, static_cast<long long>(params.r / params.p));
}

bool Element::is_identity() const {
  for (int i = 0; i < params_.n; ++i) {
    if (sigma_[i] != i || colors_[i] != 0) return false;
  }
  return true;
}

ColorVector canonical_colors(const ColorVector& colors, int r, int shift) {
  ColorVector base = colors;
  for (auto& c : base) c = residue(c, r);
  if (shift >= r) return base;
  ColorVector best = base;
  ColorVector candidate = base;
  for (int s = shift; s < r; s += shift) {
    for (std::size_t i = 0; i < colors.size(); ++i) candidate[i] = residue(base[i] + s, r);
    if (candidate < best) best = candidate;
  }
  return best;
}

Element canonicalize(const Permutation& sigma, const ColorVector& colors,
                     const GroupParams& params) {
  if (!is_permutation(sigma, params.n)) {
    throw std::invalid_argument("sigma is not a permutation of the right size");
  }
  if (static_cast<int>(colors.size()) != params.n) {
    throw std::invalid_argument("color vector has the wrong length");
  }
  long long sum = 0;
  for (int c : colors) sum += c;
  if (residue(sum, params.p) != 0) {
    throw std::invalid_argument("color sum is not 0 mod p");
  }
  return Element(params, sigma, canonical_colors(colors, params.r, params.scalar_shift()));
}

Element identity_element(const GroupParams& params) {
  Permutation sigma(params.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return canonicalize(sigma, ColorVector(params.n, 0), params);
}

Element multiply(const Element& a, const Element& b) {
  require_same_params(a, b);
  const int n = a.rank();
  Permutation sigma(n);
  ColorVector colors(n);
  for (int i = 0; i < n; ++i) {
    const int mid = a.sigma()[i];
    sigma[i] = b.sigma()[mid];
    colors[i] = a.colors()[i] + b.colors()[mid];
  }
  return canonicalize(sigma, colors, a.params());
}

Element inverse(const Element& a) {
  const int n = a.rank();
  Permutation sigma(n);
  ColorVector colors(n);
  for (int i = 0; i < n; ++i) {
    sigma[a.sigma()[i]] = i;
    colors[a.sigma()[i]] = -a.colors()[i];
  }
  return canonicalize(sigma, colors, a.params());
}

void for_each_element(const GroupParams& params,
                      const std::function<void(const Element&)>& visit,
                      std::uint64_t cap) {
  if (params.order() > cap) {
    throw CapExceeded("group order " + std::to_string(params.order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  }
  const int n = params.n;
  const int r = params.r;
  const int shift = params.scalar_shift();
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  ColorVector colors(n, 0);
  do {
    std::fill(colors.begin(), colors.end(), 0);
    while (true) {
      int sum = 0;
      for (int c : colors) sum += c;
      if (sum % params.p == 0 && canonical_colors(colors, r, shift) == colors) {
        visit(canonicalize(sigma, colors, params));
      }
      int pos = n - 1;
      while (pos >= 0 && colors[pos] == r - 1) {
        colors[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++colors[pos];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<Element> enumerate_group(const GroupParams& params, std::uint64_t cap) {
  std::vector<Element> out;
  if (params.order() <= cap) out.reserve(params.order());
  for_each_element(params, [&](const Element& g) { out.push_back(g); }, cap);
  return out;
}

std::vector<Lifting> liftings(const Element& g, int p_prime) {
  const GroupParams& gp = g.params();
  if (p_prime < 1 || gp.r % p_prime != 0) {
    throw std::invalid_argument("p' must divide r");
  }
  const long long d = std::gcd(static_cast<long long>(gp.r) * gp.n / gp.q,
                               static_cast<long long>(p_prime));
  if (gp.p % d != 0) {
    throw std::invalid_argument("GCD(rn/q, p') must divide p");
  }
  std::vector<Lifting> out;
  const int shift = gp.scalar_shift();
  for (int j = 0; j < gp.q; ++j) {
    Lifting lift{g.sigma(), g.colors()};
    long long sum = 0;
    for (auto& c : lift.colors) {
      c = residue(c + j * shift, gp.r);
      sum += c;
    }
    if (sum % p_prime == 0) out.push_back(std::move(lift));
  }
  return out;
}

int color_sum(const Element& g) {
  const GroupParams& gp = g.params();
  const long long modulus = std::gcd(static_cast<long long>(gp.r),
                                     static_cast<long long>(gp.r) * gp.n / gp.q);
  long long sum = 0;
  for (int c : g.colors()) sum += c;
  return residue(sum, modulus);
}

Element conjugate_element(const Element& g) {
  ColorVector colors = g.colors();
  for (auto& c : colors) c = -c;
  return canonicalize(g.sigma(), colors, g.params());
}

Element galois_act(const Element& g, int d) {
  if (std::gcd(d, g.params().r) != 1) {
    throw std::invalid_argument("Galois exponent must be coprime to r");
  }
  ColorVector colors = g.colors();
  for (auto& c : colors) c = residue(static_cast<long long>(c) * d, g.params().r);
  return canonicalize(g.sigma(), colors, g.params());
}

std::vector<Element> scalar_elements(const GroupParams& params) {
  std::vector<Element> out;
  Permutation sigma(params.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int c = 0; c < params.r; ++c) {
    if ((static_cast<long long>(c) * params.n) % params.p != 0) continue;
    Element g = canonicalize(sigma, ColorVector(params.n, c), params);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

std::vector<Element> generators(const GroupParams& params) {
  const int n = params.n;
  std::vector<Element> out;
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  for (int i = 0; i + 1 < n; ++i) {
    Permutation s = id;
    std::swap(s[i], s[i + 1]);
    out.push_back(canonicalize(s, ColorVector(n, 0), params));
  }
  ColorVector t(n, 0);
  t[0] = params.p;
  out.push_back(canonicalize(id, t, params));
  if (n >= 2) {
    ColorVector u(n, 0);
    u[0] = 1;
    u[1] = -1;
    out.push_back(canonicalize(id, u, params));
  }
  return out;
}

void for_each_product_one_tuple(const std::vector<Element>& elements, int k,
                                const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 1) throw std::invalid_argument("tuple length must be positive");
  if (elements.empty()) return;
  std::unordered_map<Element, int, ElementHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  const Element one = identity_element(elements.front().params());
  std::vector<int> tuple(k, 0);
  std::vector<Element> prefix{one};
  // prefix[i] = g_1 ... g_i; the last entry is forced to prefix^{-1}.
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k - 1) {
      tuple[depth] = index.at(inverse(prefix.back()));
      visit(tuple);
      return;
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      tuple[depth] = static_cast<int>(i);
      prefix.push_back(multiply(prefix.back(), elements[i]));
      rec(depth + 1);
      prefix.pop_back();
    }
  };
  rec(0);
}

std::size_t ElementHash::operator()(const Element& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (int v : g.sigma()) mix(v);
  for (int v : g.colors()) mix(v);
  return h;
}

}  // namespace prg
