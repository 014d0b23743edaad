#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "prg/io.hpp"
#include "prg/stats.hpp"

using namespace prg;

namespace {

std::vector<int> vec(const RankVector<int>& v) { return {v.begin(), v.end()}; }

UniPoly from_dense(const std::vector<long long>& c) {
  UniPoly p;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) p[static_cast<int>(i)] = c[i];
  }
  return p;
}

}  // namespace

TEST_CASE("worked example in G(6,2,3,8)") {
  const GroupParams g = validate_params(6, 2, 3, 8);
  const StatProfile prof = stat_profile(parse_element("2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2", g));
  CHECK(vec(prof.hdes) == std::vector<int>{2, 5});
  CHECK(vec(prof.h) == std::vector<int>{2, 2, 1, 1, 1, 0, 0, 0});
  CHECK(vec(prof.k) == std::vector<int>{18, 13, 13, 9, 5, 5, 1, 0});
  CHECK(vec(prof.lambda) == std::vector<int>{30, 25, 19, 15, 11, 5, 1, 0});
  CHECK(prof.fmaj == 106);
}

TEST_CASE("profile invariants") {
  for (const GroupParams g : {GroupParams{6, 2, 3, 3}, GroupParams{4, 2, 2, 3}, GroupParams{3, 1, 3, 3},
                              GroupParams{2, 1, 1, 4}}) {
    for_each_element(g, [&](const Element& e) {
      const StatProfile prof = stat_profile(e);
      long long total = 0;
      for (int i = 0; i < g.n; ++i) {
        CHECK(prof.lambda[i] == g.r * prof.h[i] + prof.k[i]);
        if (i + 1 < g.n) CHECK(prof.lambda[i] >= prof.lambda[i + 1]);
        total += prof.lambda[i];
      }
      CHECK(prof.lambda[g.n - 1] >= 0);
      CHECK(total == prof.fmaj);
      // Any representative of the scalar class gives the same statistics.
      ColorVector shifted = e.colors();
      for (auto& c : shifted) c += g.r / g.q;
      CHECK(stat_profile(canonicalize(e.sigma(), shifted, g)) == prof);
    });
  }
}

TEST_CASE("symmetric group: fmaj is Mahonian") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> ms;
    for (int i = 1; i <= n; ++i) ms.push_back(i);
    CHECK(fmaj_generating_poly({1, 1, 1, n}, false) == from_dense(oracle::q_integer_product(ms)));
  }
}

TEST_CASE("wreath products: fmaj distribution is prod [ri]") {
  for (int r = 2; r <= 4; ++r) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> ms;
      for (int i = 1; i <= n; ++i) ms.push_back(r * i);
      CHECK(fmaj_generating_poly({r, 1, 1, n}, false) == from_dense(oracle::q_integer_product(ms)));
    }
  }
}

TEST_CASE("hand value over G(2,1,2,2)") {
  const UniPoly p = fmaj_generating_poly({2, 2, 1, 2}, true);
  CHECK(format_poly(p) == "1 + 2*t + t^2");
  CHECK(dense_coefficients(p) == std::vector<std::int64_t>{1, 2, 1});
}

TEST_CASE("classical descents agree with the new statistics") {
  for (int r = 1; r <= 3; ++r) {
    for_each_element({r, 1, 1, 3}, [&](const Element& e) {
      const StatProfile prof = stat_profile(e);
      const ClassicalDescent cd = classical_fmaj(e);
      CHECK(cd.fmaj == prof.fmaj);
      for (int i = 0; i < 3; ++i) {
        CHECK(r * prof.h[i] + prof.k[i] == r * cd.d[i] + residue(e.colors()[i], r));
      }
    });
  }
  CHECK_THROWS(classical_fmaj(identity_element({2, 2, 1, 2})));
}

TEST_CASE("a_g exponents") {
  const GroupParams g = validate_params(2, 1, 1, 3);
  for_each_element(g, [&](const Element& e) {
    const auto a = a_exponents(e);
    const auto lambda = stat_profile(e).lambda;
    std::vector<int> sorted(a.begin(), a.end());
    std::sort(sorted.rbegin(), sorted.rend());
    CHECK(sorted == vec(lambda));
  });
}

TEST_CASE("polynomial helpers") {
  CHECK(format_poly(q_integer(3)) == "1 + t + t^2");
  CHECK(format_poly(UniPoly{}) == "0");
  const UniPoly p = poly_multiply(q_integer(2), q_integer(4));
  CHECK(dense_coefficients(p) == std::vector<std::int64_t>{1, 2, 2, 2, 1});
  CHECK(dense_coefficients(section_mod(p, 2)) == std::vector<std::int64_t>{1, 0, 2, 0, 1});
}
