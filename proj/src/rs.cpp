#include "prg/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace prg {

TableauPair rs_classical(const TwoLineArray& arr) {
  if (arr.top.size() != arr.bottom.size()) {
    throw std::invalid_argument("two-line array rows differ in length");
  }
  for (std::size_t i = 1; i < arr.top.size(); ++i) {
    if (arr.top[i - 1] >= arr.top[i]) throw std::invalid_argument("top row must increase");
  }
  TableauPair out;
  for (std::size_t idx = 0; idx < arr.bottom.size(); ++idx) {
    int x = arr.bottom[idx];
    std::size_t row = 0;
    while (true) {
      if (row == out.P.size()) {
        out.P.push_back({x});
        out.Q.push_back({arr.top[idx]});
        break;
      }
      auto& cells = out.P[row];
      auto it = std::upper_bound(cells.begin(), cells.end(), x);
      if (it == cells.end()) {
        cells.push_back(x);
        out.Q[row].push_back(arr.top[idx]);
        break;
      }
      if (*it == x) throw std::invalid_argument("bottom row has repeated entries");
      std::swap(x, *it);
      ++row;
    }
  }
  return out;
}

MultiTableauPair stanton_white(const Permutation& sigma, const ColorVector& colors, int r) {
  const int n = static_cast<int>(sigma.size());
  MultiTableauPair out;
  out.P.resize(r);
  out.Q.resize(r);
  for (int j = 0; j < r; ++j) {
    TwoLineArray arr;
    for (int i = 0; i < n; ++i) {
      if (residue(colors[i], r) == j) {
        arr.top.push_back(i + 1);
        arr.bottom.push_back(sigma[i] + 1);
      }
    }
    TableauPair pq = rs_classical(arr);
    out.P[j] = std::move(pq.P);
    out.Q[j] = std::move(pq.Q);
  }
  return out;
}

MultiTableauPair stanton_white(const Element& g) {
  if (g.params().p != 1 || g.params().q != 1) {
    throw std::invalid_argument("Stanton-White correspondence needs a wreath product G(r,1,1,n)");
  }
  return stanton_white(g.sigma(), g.colors(), g.params().r);
}

ProjectiveRs projective_rs(const Element& g) {
  const GroupParams& gp = g.params();
  MultiTableauPair pair = stanton_white(g.sigma(), g.colors(), gp.r);
  ProjectiveRs out;
  out.P = canonical_tableau(pair.P, gp.q);
  out.Q = canonical_tableau(pair.Q, gp.q);
  out.shape = shape_class(shape_of(pair.P), gp.q);
  return out;
}

}  // namespace prg
