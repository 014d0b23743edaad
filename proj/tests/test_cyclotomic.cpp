#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "prg/cyclotomic.hpp"

using namespace prg;

namespace {

std::complex<double> evaluate(const Cyclotomic& x) {
  const auto z = std::polar(1.0, 2 * std::numbers::pi / x.modulus());
  std::complex<double> out = 0;
  std::complex<double> power = 1;
  for (auto c : x.coefficients()) {
    out += static_cast<double>(c) * power;
    power *= z;
  }
  return out;
}

Cyclotomic random_element(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> exp(0, 2 * r);
  Cyclotomic x(r);
  for (int i = 0; i < 4; ++i) x += Cyclotomic::zeta_power(r, exp(rng)) * coef(rng);
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity") {
  for (int r = 1; r <= 12; ++r) {
    CHECK(Cyclotomic::zeta_power(r, r) == Cyclotomic::integer(r, 1));
    CHECK(Cyclotomic::zeta_power(r, -1) * Cyclotomic::zeta_power(r, 1) == Cyclotomic::integer(r, 1));
    Cyclotomic sum(r);
    for (int j = 0; j < r; ++j) sum += Cyclotomic::zeta_power(r, j);
    CHECK(sum == Cyclotomic::integer(r, r == 1 ? 1 : 0));
    CHECK(sum.is_zero() == (r > 1));
  }
  CHECK(Cyclotomic::zeta_power(2, 1) == Cyclotomic::integer(2, -1));
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  std::mt19937 rng(11);
  for (int r : {3, 4, 5, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Cyclotomic a = random_element(r, rng);
      const Cyclotomic b = random_element(r, rng);
      CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-9);
      CHECK(std::abs(evaluate(a + b) - (evaluate(a) + evaluate(b))) < 1e-9);
      CHECK(std::abs(evaluate(a.conj()) - std::conj(evaluate(a))) < 1e-9);
      CHECK(a.galois(1) == a);
      CHECK(a.galois(r - 1) == a.conj());
      CHECK((a - a).is_zero());
      CHECK(-(-a) == a);
    }
  }
}

TEST_CASE("Galois action is multiplicative") {
  std::mt19937 rng(3);
  const Cyclotomic a = random_element(12, rng);
  const Cyclotomic b = random_element(12, rng);
  for (int d : {1, 5, 7, 11}) CHECK((a * b).galois(d) == a.galois(d) * b.galois(d));
  CHECK(a.galois(5).galois(7) == a.galois(35 % 12));
  CHECK_THROWS_AS(a.galois(2), std::invalid_argument);
}

TEST_CASE("integers") {
  CHECK(Cyclotomic::integer(6, 7).is_integer());
  CHECK(Cyclotomic::integer(6, 7).as_integer() == 7);
  CHECK_THROWS_AS(Cyclotomic::zeta_power(3, 1).as_integer(), std::domain_error);
  // zeta_6 + zeta_6^5 = 1
  CHECK((Cyclotomic::zeta_power(6, 1) + Cyclotomic::zeta_power(6, 5)).as_integer() == 1);
  CHECK_THROWS(Cyclotomic(3) + Cyclotomic(4));
}
