#include <doctest.h>

#include "prg/galois.hpp"
#include "prg/io.hpp"

using namespace prg;

TEST_CASE("sigma acts on shape classes") {
  const int r = 12;
  const auto classes = enumerate_fer_classes(r, 1, 2, 2);
  for (const auto& mu : classes) {
    CHECK(sigma_on_shape(mu, 1) == mu);
    for (int d : {5, 7, 11}) {
      for (int e : {5, 7, 11}) {
        CHECK(sigma_on_shape(sigma_on_shape(mu, e), d) == sigma_on_shape(mu, d * e % r));
      }
    }
    CHECK(conjugate_shape(conjugate_shape(mu)) == mu);
    CHECK(sigma_on_shape(mu, r - 1) == conjugate_shape(mu));
  }
  CHECK_THROWS_AS(sigma_on_shape(classes.front(), 2), std::invalid_argument);
}

TEST_CASE("sigma moves component i to component d*i") {
  // A single box in component 1 of a 5-tuple lands in component 2 under d = 2.
  MultiShape one(5);
  one[1] = Partition{1};
  const ShapeClass moved = sigma_on_shape(shape_class(one, 1), 2);
  CHECK(moved.representative[2] == Partition{1});
  CHECK(partition_size(moved.representative[1]) == 0);
}

TEST_CASE("twisted series agree") {
  for (const GroupParams g : {GroupParams{3, 1, 1, 2}, GroupParams{4, 2, 2, 2}, GroupParams{6, 2, 3, 2},
                              GroupParams{3, 3, 1, 3}, GroupParams{5, 1, 5, 2}, GroupParams{5, 1, 1, 1},
                              GroupParams{5, 1, 1, 2}, GroupParams{8, 2, 2, 2}, GroupParams{7, 7, 1, 2}}) {
    for (int d = 1; d < g.r; ++d) {
      if (std::gcd(d, g.r) != 1) continue;
      const GaloisResult res = galois_check(g, d);
      CHECK_MESSAGE(res.equal, params_label(g) << " d=" << d << " " << res.witness.value_or(""));
    }
  }
}

TEST_CASE("collapse reproduces the fmaj bivariate sum") {
  const GroupParams g = validate_params(4, 2, 1, 2);
  const int d = 3;
  const PartitionSeries s = gsigma_combinatorial(g, d);
  std::map<std::vector<int>, std::int64_t> direct;
  for_each_element(dual_params(g), [&](const Element& e) {
    const int a = static_cast<int>(stat_profile(galois_act(e, d)).fmaj);
    const int b = static_cast<int>(stat_profile(inverse(e)).fmaj);
    ++direct[{a, b}];
  });
  CHECK(s.collapse_total_degree() == direct);
  CHECK(s.evaluate_at_one() == static_cast<std::int64_t>(g.order()));
}
