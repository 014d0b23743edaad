#pragma once

// The Galois twist zeta -> zeta^d: its action on shape classes and the
// twisted bivariate series, computed from G* and from the shape classes.

#include <optional>
#include <string>

#include "prg/group.hpp"
#include "prg/series.hpp"
#include "prg/tableaux.hpp"

namespace prg {

/// Component d*i mod r of the result is component i of mu; the class is
/// taken again under the same shift. Requires GCD(d, r) = 1.
ShapeClass sigma_on_shape(const ShapeClass& mu, int d);

/// Component i of the result is component -i mod r.
ShapeClass conjugate_shape(const ShapeClass& mu);

/// sum over g in G* of Y1^{lambda(g^sigma)} Y2^{lambda(g^{-1})}.
PartitionSeries gsigma_combinatorial(const GroupParams& g, int d,
                                     std::optional<int> degree_bound = std::nullopt,
                                     std::uint64_t cap = default_enumeration_cap());

/// sum over mu in Fer(r,q,p,n) modulo C_p of |(C_p)_mu| f^{sigma mu}(Y1) f^{conj mu}(Y2).
PartitionSeries gsigma_representation(const GroupParams& g, int d,
                                      std::optional<int> degree_bound = std::nullopt);

struct GaloisResult {
  bool equal = false;
  PartitionSeries combinatorial;
  PartitionSeries representation;
  std::optional<std::string> witness;
};

GaloisResult galois_check(const GroupParams& g, int d,
                          std::optional<int> degree_bound = std::nullopt,
                          std::uint64_t cap = default_enumeration_cap());

}  // namespace prg
