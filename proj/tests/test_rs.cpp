#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "prg/rs.hpp"
#include "prg/verify.hpp"

using namespace prg;

TEST_CASE("classical insertion") {
  // 3 1 2: P = [[1,2],[3]], Q = [[1,3],[2]]
  const TableauPair tp = rs_classical({{1, 2, 3}, {3, 1, 2}});
  CHECK(tp.P == Tableau{{1, 2}, {3}});
  CHECK(tp.Q == Tableau{{1, 3}, {2}});
}

TEST_CASE("classical RS is a bijection on S_5") {
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::pair<Tableau, Tableau>> pairs;
  do {
    const TableauPair tp = rs_classical({{1, 2, 3, 4, 5}, perm});
    std::vector<int> shape_p, shape_q;
    for (const auto& row : tp.P) shape_p.push_back(static_cast<int>(row.size()));
    for (const auto& row : tp.Q) shape_q.push_back(static_cast<int>(row.size()));
    CHECK(shape_p == shape_q);
    pairs.emplace(tp.P, tp.Q);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(pairs.size() == 120);
}

TEST_CASE("colored RS is a bijection on G(3,1,1,3)") {
  std::set<std::pair<MultiTableau, MultiTableau>> pairs;
  for_each_element({3, 1, 1, 3}, [&](const Element& e) {
    const MultiTableauPair tp = stanton_white(e);
    CHECK(shape_of(tp.P) == shape_of(tp.Q));
    CHECK(is_standard(tp.P));
    CHECK(is_standard(tp.Q));
    pairs.emplace(tp.P, tp.Q);
  });
  CHECK(pairs.size() == 162);
}

TEST_CASE("colored RS places colors by component") {
  // A single letter of color 2 lands in component 2.
  const MultiTableauPair tp = stanton_white(Permutation{0}, ColorVector{2}, 3);
  CHECK(tp.P[2] == Tableau{{1}});
  CHECK(tp.P[0].empty());
  CHECK(tp.P[1].empty());
}

TEST_CASE("projective RS") {
  for (const GroupParams g : {GroupParams{3, 1, 3, 3}, GroupParams{2, 2, 1, 3}, GroupParams{4, 2, 2, 2},
                              GroupParams{6, 2, 3, 2}, GroupParams{2, 1, 2, 3}, GroupParams{4, 1, 4, 2}}) {
    const CheckOutcome out = check_projrs(g);
    CHECK_MESSAGE(out.pass, params_label(g) << " " << out.witness.dump());
  }
}
