#pragma once

// Exponent matrices of monomials in k sets of n variables, the basis set
// B_k(r,p,q,n), the bijection Phi with compatible tuples of G*, averaging
// over the diagonal action, and the partition-graded Hilbert series.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prg/cyclotomic.hpp"
#include "prg/group.hpp"
#include "prg/partition.hpp"
#include "prg/series.hpp"

namespace prg {

inline constexpr int kMaxBlocks = 8;

template <class T>
using BlockVector = boost::container::static_vector<T, kMaxBlocks>;

/// A k x n matrix of non-negative integers; row i holds the exponents of
/// x_{i,1..n}. Fixed capacity, no heap storage.
struct KPartiteMatrix {
  BlockVector<RankVector<int>> rows;

  KPartiteMatrix() = default;
  KPartiteMatrix(int k, int n);

  int k() const { return static_cast<int>(rows.size()); }
  int n() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  int row_sum(int i) const;
  int column_sum(int j) const;
  int total() const;

  friend bool operator==(const KPartiteMatrix&, const KPartiteMatrix&) = default;
  friend bool operator<(const KPartiteMatrix& a, const KPartiteMatrix& b) {
    return a.rows < b.rows;
  }
};

/// a_{i,j} >= a_{i,j+1} whenever rows above i tie in columns j, j+1; i.e.
/// the columns are weakly decreasing in lexicographic order.
bool is_kpartite(const KPartiteMatrix& a);

/// Column sums pairwise congruent mod r and p * s_j = 0 mod r.
bool colu_criterion(const KPartiteMatrix& a, const GroupParams& g);

/// Membership in B_k for G: k-partite, row sums = 0 mod q, colu_criterion.
bool in_basis_set(const KPartiteMatrix& a, const GroupParams& g);

/// All n parts (zeros included) congruent mod r to one multiple of r/p.
bool par_rpn_contains(const Partition& lambda, int r, int p, int n);
/// Members of Par(r,p,n) of size at most degree_bound, padded to n.
std::vector<Partition> par_rpn_enumerate(int r, int p, int n, int degree_bound);

/// lambda - lambda(g) lies in Par(r,p',n), p' the quotient parameter of g's
/// group, and [|g|; lambda] = g.
bool is_g_compatible(const Partition& lambda, const Element& g);

struct PhiTuple {
  BlockVector<Element> gs;
  BlockVector<Partition> lambdas;
};

/// Row i, column j holds lambda^(i) at (sigma_1 ... sigma_{i-1})(j). Throws
/// unless the product of the g_i is 1 and each lambda^(i) is compatible.
KPartiteMatrix phi(const PhiTuple& tuple);

/// Inverse of phi for A in B_k of the group g; the elements live in G*.
/// Throws std::invalid_argument when A is not in B_k.
PhiTuple phi_inverse(const KPartiteMatrix& a, const GroupParams& g);

/// Streams every k-partite matrix with entries <= max_entry and total at
/// most max_total (if set), columns chosen in decreasing lexicographic order.
void for_each_kpartite(int k, int n, int max_entry, std::optional<int> max_total,
                       const std::function<void(const KPartiteMatrix&)>& visit);

struct AverageResult {
  /// Monomial (as an exponent matrix) -> coefficient of sum_g g(X^A).
  std::map<KPartiteMatrix, Cyclotomic> terms;
  bool nonzero = false;
};

/// sum over g in G of g(X^A) with g(x_{i,j}) = zeta^{c_j} x_{i,sigma(j)},
/// without the 1/|G| factor. Requires row sums = 0 mod q.
AverageResult average_monomial(const KPartiteMatrix& a, const GroupParams& g,
                               std::uint64_t cap = default_enumeration_cap());

/// sum over A in B_k with |A| <= bound of Y^{Lambda(A)}.
PartitionSeries hilb_diag(const GroupParams& g, int k, int degree_bound);
/// prod_i of sum over lambda in Par(r,p,n), |lambda| = 0 mod q, of Y_i^lambda.
PartitionSeries hilb_tensor(const GroupParams& g, int k, int degree_bound);
/// sum over k-tuples of G* with product 1 of prod Y_i^{lambda(g_i)}.
PartitionSeries uou_rhs(const GroupParams& g, int k, std::optional<int> degree_bound,
                        std::uint64_t cap = default_enumeration_cap());

struct UouResult {
  bool equal = false;
  PartitionSeries diag;
  PartitionSeries product;
  std::optional<std::string> witness;
};

/// hilb_diag against uou_rhs * hilb_tensor, both truncated at the bound.
UouResult uou_check(const GroupParams& g, int k, int degree_bound,
                    std::uint64_t cap = default_enumeration_cap());

/// Number of k-tuples in G* with product 1.
std::uint64_t count_basis(const GroupParams& g, int k,
                          std::uint64_t cap = default_enumeration_cap());

}  // namespace prg
