#pragma once

// Robinson-Schensted row insertion, the colorwise (Stanton-White) extension
// to G(r,n), and its projective version on G(r,p,q,n).

#include <vector>

#include "prg/group.hpp"
#include "prg/tableaux.hpp"

namespace prg {

struct TwoLineArray {
  std::vector<int> top;     // strictly increasing
  std::vector<int> bottom;  // distinct
};

struct TableauPair {
  Tableau P;  // insertion tableau (bottom row values)
  Tableau Q;  // recording tableau (top row values)
};

TableauPair rs_classical(const TwoLineArray& arr);

struct MultiTableauPair {
  MultiTableau P;
  MultiTableau Q;
};

/// Colorwise RS on the arrays A_j = {(i, sigma(i)) : c_i = j}, for raw
/// (uncanonicalized) wreath data; colors are reduced mod r.
MultiTableauPair stanton_white(const Permutation& sigma, const ColorVector& colors, int r);

/// Requires g in a wreath product G(r,1,1,n).
MultiTableauPair stanton_white(const Element& g);

struct ProjectiveRs {
  MultiTableau P;  // canonical representative of the C_q-class
  MultiTableau Q;
  ShapeClass shape;  // common shape class of P and Q
};

/// Lifts g to G(r,p,n) through its stored representative and returns the
/// C_q-classes of P and Q.
ProjectiveRs projective_rs(const Element& g);

}  // namespace prg
