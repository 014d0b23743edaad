#include <doctest.h>

#include <algorithm>

#include "prg/diagonal.hpp"
#include "prg/io.hpp"
#include "prg/verify.hpp"

using namespace prg;

namespace {

KPartiteMatrix make(const std::vector<std::vector<int>>& rows) {
  KPartiteMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a.rows[i][j] = rows[i][j];
  return a;
}

// Every k x n matrix with entries <= max_entry, by odometer.
template <class F>
void all_matrices(int k, int n, int max_entry, F&& visit) {
  std::vector<int> digits(k * n, 0);
  while (true) {
    KPartiteMatrix a(k, n);
    for (int c = 0; c < k * n; ++c) a.rows[c / n][c % n] = digits[c];
    visit(a);
    int c = k * n - 1;
    while (c >= 0 && digits[c] == max_entry) digits[c--] = 0;
    if (c < 0) return;
    ++digits[c];
  }
}

}  // namespace

TEST_CASE("k-partite matrices") {
  CHECK(is_kpartite(make({{2, 1, 1}, {0, 3, 1}})));
  CHECK_FALSE(is_kpartite(make({{2, 1, 1}, {0, 1, 3}})));
  CHECK_FALSE(is_kpartite(make({{1, 2}})));
  CHECK(is_kpartite(make({{1, 1}, {1, 1}})));
}

TEST_CASE("k-partite enumeration matches brute force") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<KPartiteMatrix> streamed;
      for_each_kpartite(k, n, 3, std::nullopt, [&](const KPartiteMatrix& a) { streamed.push_back(a); });
      std::vector<KPartiteMatrix> brute;
      all_matrices(k, n, 3, [&](const KPartiteMatrix& a) {
        if (is_kpartite(a)) brute.push_back(a);
      });
      std::sort(streamed.begin(), streamed.end());
      CHECK(std::adjacent_find(streamed.begin(), streamed.end()) == streamed.end());
      CHECK(streamed == brute);
    }
  }
}

TEST_CASE("column-sum criterion") {
  const GroupParams g = validate_params(4, 2, 1, 2);
  CHECK(colu_criterion(make({{2, 0}, {0, 2}}), g));
  CHECK_FALSE(colu_criterion(make({{1, 0}, {0, 1}}), g));  // p * 1 != 0 mod 4
  CHECK_FALSE(colu_criterion(make({{3, 0}, {0, 1}}), g));  // 3 and 1 differ mod 4
}

TEST_CASE("Par(r,p,n)") {
  CHECK(par_rpn_contains(Partition{5, 3}, 2, 2, 2));
  CHECK_FALSE(par_rpn_contains(Partition{5, 3}, 2, 1, 2));
  CHECK_FALSE(par_rpn_contains(Partition{5, 2}, 2, 2, 2));
  CHECK(par_rpn_contains(Partition{6, 2}, 4, 2, 2));
  CHECK_FALSE(par_rpn_contains(Partition{6, 2}, 4, 2, 3));  // the zero part breaks the congruence
  CHECK(par_rpn_contains(Partition{4, 2, 0}, 2, 1, 3));
  for (const auto& lambda : par_rpn_enumerate(3, 3, 2, 9)) CHECK(par_rpn_contains(lambda, 3, 3, 2));
}

TEST_CASE("averaging") {
  // S_2 moves x_{1,1} to x_{1,2}.
  const AverageResult s2 = average_monomial(make({{1, 0}}), {1, 1, 1, 2});
  REQUIRE(s2.nonzero);
  CHECK(s2.terms.size() == 2);
  for (const auto& [m, c] : s2.terms) CHECK(c == Cyclotomic::integer(1, 1));
  // Under B_1 the odd monomial averages to zero.
  CHECK_FALSE(average_monomial(make({{1}}), {2, 1, 1, 1}).nonzero);
  CHECK(average_monomial(make({{2}}), {2, 1, 1, 1}).nonzero);
  CHECK_THROWS_AS(average_monomial(make({{1, 0}}), {2, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("phi and its inverse") {
  const GroupParams g = validate_params(2, 1, 1, 2);
  for (int k = 1; k <= 3; ++k) {
    const CheckOutcome out = check_bije(g, k, 3);
    CHECK_MESSAGE(out.pass, out.witness.dump());
  }
  for (const GroupParams h : {GroupParams{4, 2, 2, 2}, GroupParams{3, 1, 3, 3}, GroupParams{6, 2, 3, 2}}) {
    CHECK(check_bije(h, 2, 3).pass);
  }
  CHECK_THROWS_AS(phi_inverse(make({{1, 0}}), g), std::invalid_argument);
}

TEST_CASE("basis count") {
  for (const GroupParams g : {GroupParams{2, 1, 1, 2}, GroupParams{3, 1, 3, 2}, GroupParams{1, 1, 1, 3}}) {
    for (int k = 1; k <= 3; ++k) CHECK(check_card(g, k).pass);
  }
}

TEST_CASE("diagonal series against a brute-force sum") {
  // Every matrix with entries <= bound, filtered by the defining conditions,
  // graded by its sorted rows.
  const int bound = 5;
  for (const GroupParams g : {GroupParams{2, 1, 1, 2}, GroupParams{2, 2, 1, 2}, GroupParams{2, 1, 2, 2}}) {
    PartitionSeries brute(2, 2, bound);
    all_matrices(2, 2, bound, [&](const KPartiteMatrix& a) {
      if (a.total() > bound || !is_kpartite(a)) return;
      for (int i = 0; i < 2; ++i) {
        if (a.row_sum(i) % g.q) return;
      }
      const int s0 = a.column_sum(0);
      const int s1 = a.column_sum(1);
      if ((s0 - s1) % g.r || (g.p * s0) % g.r || (g.p * s1) % g.r) return;
      MultiExponent exps;
      for (const auto& row : a.rows) {
        Partition p(row.begin(), row.end());
        std::sort(p.rbegin(), p.rend());
        exps.push_back(p);
      }
      brute.add(exps, 1);
    });
    CHECK(hilb_diag(g, 2, bound) == brute);
  }
}

TEST_CASE("diagonal series factorization") {
  for (const GroupParams g : {GroupParams{2, 1, 1, 2}, GroupParams{2, 2, 1, 2}}) {
    const UouResult res = uou_check(g, 2, 6);
    CHECK_MESSAGE(res.equal, res.witness.value_or(""));
  }
  // k = 1 recovers the invariant ring graded by partitions.
  CHECK(uou_check({3, 1, 1, 2}, 1, 9).equal);
}
