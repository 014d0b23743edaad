#pragma once

// r-tuples of Ferrers diagrams, their standard fillings, and the quotient
// by the cyclic shift of component indices by multiples of r/q.

#include <cstdint>
#include <vector>

#include "prg/partition.hpp"
#include "prg/stats.hpp"

namespace prg {

/// shapes[j] is the diagram in component j (0-based), j = 0..r-1.
using MultiShape = std::vector<Partition>;

/// Rows of one diagram, each row left to right.
using Tableau = std::vector<std::vector<int>>;
using MultiTableau = std::vector<Tableau>;

struct ShapeClass {
  MultiShape representative;  // least tuple of its orbit
  int shift_amount = 1;       // r/q
  int stabilizer_order = 1;   // divides q

  int modulus() const { return static_cast<int>(representative.size()); }
  int quotient() const { return modulus() / shift_amount; }
  int orbit_size() const { return quotient() / stabilizer_order; }

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
  friend bool operator<(const ShapeClass& a, const ShapeClass& b) {
    return a.representative < b.representative;
  }
};

int multishape_size(const MultiShape& shape);
/// sum_j j |lambda^(j)|.
long long color_weight(const MultiShape& shape);

/// Component j of the result is component (j + amount) mod r of the input.
MultiShape shift_shape(const MultiShape& shape, int amount);

/// Fer(r,p,n): r-tuples of partitions of total size n with
/// sum_j j |lambda^(j)| = 0 mod p.
std::vector<MultiShape> enumerate_fer(int r, int p, int n);

/// Orbit representatives of Fer(r,p,n) under the shift by r/q.
std::vector<ShapeClass> enumerate_fer_classes(int r, int p, int q, int n);

/// The class of `shape` under shifts by multiples of r/q.
ShapeClass shape_class(const MultiShape& shape, int q);

/// Number of standard fillings of the tuple.
std::uint64_t count_tableaux(const MultiShape& shape);
/// |ST_mu|: C_q-orbits of tableaux over the shapes of the class.
std::uint64_t class_tableau_count(const ShapeClass& mu);

/// All standard fillings of the tuple with 1..n.
std::vector<MultiTableau> enumerate_tableaux(const MultiShape& shape);

/// One representative filling (of the class representative shape) per
/// tableau class in ST_mu.
std::vector<MultiTableau> tableau_class_representatives(const ShapeClass& mu);

MultiShape shape_of(const MultiTableau& t);
/// Every number 1..n once, rows and columns strictly increasing.
bool is_standard(const MultiTableau& t);

/// Rotates component indices by j*step, like shift_shape.
MultiTableau shift_tableau(const MultiTableau& t, int j, int step);
/// Lexicographically least of the q shifts of t (step r/q).
MultiTableau canonical_tableau(const MultiTableau& t, int q);

/// HDes, h, k, lambda and fmaj of a tableau in ST(r,.,q,n); c_i is the
/// 0-based component holding i. Throws std::invalid_argument unless t is
/// standard.
StatProfile tableau_stats(const MultiTableau& t, int q);

}  // namespace prg
