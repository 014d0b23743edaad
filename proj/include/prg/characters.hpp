#pragma once

// Irreducible characters of the wreath product G(r,n), coarse Kronecker
// coefficients of G(r,p,q,n) and fake-degree polynomials.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prg/cyclotomic.hpp"
#include "prg/group.hpp"
#include "prg/series.hpp"
#include "prg/tableaux.hpp"

namespace prg {

/// (cycle length, color sum over the cycle mod r), sorted decreasingly.
using CycleType = std::vector<std::pair<int, int>>;

CycleType cycle_type(const Permutation& sigma, const ColorVector& colors, int r);
/// Cycle type of the stored representative.
CycleType cycle_type(const Element& g);

/// Murnaghan-Nakayama recursion for chi_mu on G(r,n):
/// chi_mu(t) = sum_j zeta^{j z} sum_strips (-1)^height chi_{mu - strip}(t - (l,z)).
/// Memoized; an engine must not be shared between threads.
class CharacterEngine {
 public:
  explicit CharacterEngine(int r);
  int modulus() const { return r_; }
  Cyclotomic value(const MultiShape& shape, const CycleType& type);

 private:
  Cyclotomic eval(const MultiShape& shape, const CycleType& type, std::size_t from);

  int r_;
  std::map<std::pair<MultiShape, CycleType>, Cyclotomic> memo_;
};

/// Uses a per-thread engine for the shape's modulus.
Cyclotomic wreath_character(const MultiShape& shape, const CycleType& type);

struct CycleClass {
  CycleType type;
  std::uint64_t size = 0;
};

/// Histogram of cycle types over the elements of G(r,p,n), sorted by type.
std::vector<CycleClass> cycle_classes(int r, int p, int n,
                                      std::uint64_t cap = default_enumeration_cap());

/// Coarse Kronecker coefficients of H = G(r,a,b,n) for shape classes in
/// Fer(r,b,n) taken modulo the shift by r/a. Character values are computed
/// once per class, so repeated queries are cheap.
class KroneckerTable {
 public:
  KroneckerTable(const GroupParams& h, std::vector<ShapeClass> classes,
                 std::uint64_t cap = default_enumeration_cap());

  const std::vector<ShapeClass>& classes() const { return classes_; }
  /// (a / r^n n!) sum over G(r,a,n) of prod_i chi_{mu_i}. Throws
  /// std::domain_error if the average is not a non-negative integer.
  std::int64_t coefficient(const std::vector<int>& indices) const;

 private:
  GroupParams h_;
  std::vector<ShapeClass> classes_;
  std::vector<CycleClass> cycle_classes_;
  std::vector<std::vector<Cyclotomic>> values_;  // [class][cycle class]
};

/// Single query form of KroneckerTable.
std::int64_t coarse_kronecker(const GroupParams& h, const std::vector<ShapeClass>& mus,
                              std::uint64_t cap = default_enumeration_cap());

/// sum over the tableau classes T in ST_mu of Y^{lambda(T)} (one block).
PartitionSeries fake_degree_poly(const ShapeClass& mu);

struct MaincombResult {
  bool equal = false;
  PartitionSeries lhs;
  PartitionSeries rhs;
  std::optional<std::string> witness;
};

/// Both sides of the k-fold identity for G: the sum over k-tuples of G with
/// product 1 of prod Y_i^{lambda(g_i)}, against the sum over k-tuples of
/// classes in Fer(r,p,q,n) of the coarse Kronecker coefficient of G* times
/// prod f_{mu_i}(Y_i).
MaincombResult maincomb_check(const GroupParams& g, int k,
                              std::optional<int> degree_bound = std::nullopt,
                              std::uint64_t cap = default_enumeration_cap());

}  // namespace prg
