#pragma once

// Descent-type statistics on G(r,p,q,n): homogeneous descents, the h and k
// vectors, the partition lambda(g) = r h + k and the flag-major index.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "prg/group.hpp"

namespace prg {

struct StatProfile {
  RankVector<int> hdes;  // 1-based positions in [n-1]
  RankVector<int> h;
  RankVector<int> k;
  RankVector<int> lambda;
  long long fmaj = 0;

  friend bool operator==(const StatProfile&, const StatProfile&) = default;
};

/// Shared core for elements and tableaux. descends[i] (0-based, i < n-1)
/// says whether position i+1 is a descent of the underlying order (sigma
/// descent, or "i+1 strictly above i+2" for tableaux). `step` is the
/// modulus r/q used for k_n.
StatProfile profile_from_descents(std::span<const bool> descends,
                                  std::span<const int> colors, int r, int step);

StatProfile stat_profile(const Element& g);

struct ClassicalDescent {
  RankVector<int> des;  // 1-based
  RankVector<int> d;
  long long fmaj = 0;
};

/// Adin-Roichman descents and flag-major index on the wreath product
/// G(r,1,1,n). Throws unless p = q = 1.
ClassicalDescent classical_fmaj(const Element& g);

/// Exponent vector of a_g = prod_i x_{|g|(i)}^{lambda_i(g)}.
RankVector<int> a_exponents(const Element& g);

/// Sparse univariate integer polynomial, exponent -> coefficient.
using UniPoly = std::map<int, std::int64_t>;

/// sum over G (or G* when over_dual) of t^{fmaj(g)}.
UniPoly fmaj_generating_poly(const GroupParams& params, bool over_dual,
                             std::uint64_t cap = default_enumeration_cap());

/// [m]_t = 1 + t + ... + t^{m-1}.
UniPoly q_integer(int m);
UniPoly poly_multiply(const UniPoly& a, const UniPoly& b);
/// Keeps only the terms whose exponent is divisible by `modulus`.
UniPoly section_mod(const UniPoly& a, int modulus);

/// "1 + 2*t + t^2"; the zero polynomial prints as "0".
std::string format_poly(const UniPoly& poly, const std::string& var = "t");
/// Dense coefficient array from degree 0 up to the top degree.
std::vector<std::int64_t> dense_coefficients(const UniPoly& poly);

}  // namespace prg
