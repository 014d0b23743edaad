#pragma once

// Elements and arithmetic of the projective reflection groups
// G(r,p,q,n) = G(r,p,n) / C_q.
//
// An element is stored as [sigma; c_1..c_n]: the non-zero entry of row i of
// the monomial matrix is zeta_r^{c_i} and sits in column sigma(i).  Since
// the scalar subgroup C_q is generated by zeta_q I, the colors are only
// defined up to adding a common multiple of r/q; the stored representative is
// the lexicographically least such color vector.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/static_vector.hpp>

namespace prg {

inline constexpr int kMaxRank = 16;

template <class T>
using RankVector = boost::container::static_vector<T, kMaxRank>;

/// 0-based images: sigma[i] = sigma(i).
using Permutation = RankVector<int>;
using ColorVector = RankVector<int>;

/// Thrown when an enumeration would exceed the configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [c]_s: least nonnegative residue of c modulo s.
constexpr int residue(long long c, long long s) {
  const long long m = c % s;
  return static_cast<int>(m < 0 ? m + s : m);
}

/// Enumeration cap (default 10^6). PRG_ENUMERATION_CAP overrides it.
std::uint64_t default_enumeration_cap();

struct GroupParams {
  int r = 1;
  int p = 1;
  int q = 1;
  int n = 1;

  /// r^n n! / (pq). Throws std::overflow_error past 2^63.
  std::uint64_t order() const;
  /// Order of the reflection group G(r,p,n) before the quotient.
  std::uint64_t cover_order() const;
  /// r/q: the common color shift generating C_q.
  int scalar_shift() const { return r / q; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Checks p|r, q|r and pq|rn. Throws std::invalid_argument naming the
/// violated condition.
GroupParams validate_params(int r, int p, int q, int n);

/// G* = G(r,q,p,n).
GroupParams dual_params(const GroupParams& params);

/// GCD(rn/pq, r/q): the number of scalar elements of G.
int scalar_count(const GroupParams& params);

/// GCD(rn/pq, r/q) == GCD(rn/pq, r/p). Valid only for n != 2.
bool is_isomorphic_to_dual(const GroupParams& params);

class Element {
 public:
  const GroupParams& params() const { return params_; }
  const Permutation& sigma() const { return sigma_; }
  const ColorVector& colors() const { return colors_; }
  int rank() const { return params_.n; }

  bool is_identity() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    if (a.sigma_ != b.sigma_) return a.sigma_ < b.sigma_;
    return a.colors_ < b.colors_;
  }

 private:
  friend Element canonicalize(const Permutation&, const ColorVector&,
                              const GroupParams&);
  Element(GroupParams params, Permutation sigma, ColorVector colors)
      : params_(params), sigma_(std::move(sigma)), colors_(std::move(colors)) {}

  GroupParams params_;
  Permutation sigma_;
  ColorVector colors_;
};

/// Builds the element [sigma; colors] with colors reduced mod r and replaced by
/// the lexicographically least of the q shifts by multiples of r/q. Throws if
/// sigma is not a permutation of {0..n-1} or the color sum is not 0 mod p.
Element canonicalize(const Permutation& sigma, const ColorVector& colors,
                     const GroupParams& params);

/// Lexicographically least shift of colors by multiples of `shift` (mod r).
ColorVector canonical_colors(const ColorVector& colors, int r, int shift);

Element identity_element(const GroupParams& params);

/// Product with left-to-right composition: first a, then b.
Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);

/// Every element of G exactly once, in canonical form, ordered by
/// (sigma lexicographic, colors lexicographic).
std::vector<Element> enumerate_group(const GroupParams& params,
                                     std::uint64_t cap = default_enumeration_cap());

/// Streaming form of enumerate_group; same order.
void for_each_element(const GroupParams& params,
                      const std::function<void(const Element&)>& visit,
                      std::uint64_t cap = default_enumeration_cap());

struct Lifting {
  Permutation sigma;
  ColorVector colors;
  friend bool operator==(const Lifting&, const Lifting&) = default;
};

/// All representatives of g in G(r,p',n): the shifts of g's colors by
/// multiples of r/q whose color sum is 0 mod p'. Requires p'|r and
/// GCD(rn/q, p') | p.
std::vector<Lifting> liftings(const Element& g, int p_prime);

/// sum c_i reduced modulo GCD(r, rn/q).
int color_sum(const Element& g);

/// Entrywise complex conjugation: colors negated.
Element conjugate_element(const Element& g);

/// Entrywise Galois action zeta_r -> zeta_r^d; requires GCD(d, r) = 1.
Element galois_act(const Element& g, int d);

/// The elements with identity permutation and constant colors.
std::vector<Element> scalar_elements(const GroupParams& params);

/// A generating set: adjacent transpositions, [1; p e_1] and
/// [1; e_1 - e_2] (images of generators of G(r,p,n)).
std::vector<Element> generators(const GroupParams& params);

/// Streams every k-tuple (g_1,...,g_k) of `elements` (a whole group, as
/// returned by enumerate_group) with g_1 ... g_k = 1, as indices.
void for_each_product_one_tuple(const std::vector<Element>& elements, int k,
                                const std::function<void(const std::vector<int>&)>& visit);

struct ElementHash {
  std::size_t operator()(const Element& g) const noexcept;
};

}  // namespace prg
