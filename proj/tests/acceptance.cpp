// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "prg/characters.hpp"
#include "prg/stats.hpp"
#include "prg/verify.hpp"

using namespace prg;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict from_report(const VerifyReport& report) {
  Verdict v;
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    if (failed++ == 0) v.detail = "first failure " + c.name + " " + c.params.dump() + " " + c.witness.dump();
  }
  v.pass = failed == 0 && !report.checks.empty();
  if (v.pass) v.detail = std::to_string(report.checks.size()) + " " + report.checks.front().name + " checks";
  else if (report.checks.empty()) v.detail = "no checks ran";
  else v.detail = std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " failed; " + v.detail;
  return v;
}

Verdict merge(Verdict a, const Verdict& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

VerifyReport suite(const std::string& name, std::uint64_t max_order, int bije_entry = 3) {
  VerifyConfig config;
  config.max_order = max_order;
  config.bije_max_entry = bije_entry;
  return run_verify(name, config);
}

int failures = 0;

void criterion(int number, const std::string& title, double limit_ms,
               const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (limit_ms > 0 && ms >= limit_ms) {
    v.pass = false;
    v.detail += "; over the time limit of " + std::to_string(limit_ms) + " ms";
  }
  if (!v.pass) ++failures;
  std::printf("criterion %2d %s  %s (%.3f ms) %s\n", number, v.pass ? "PASS" : "FAIL", title.c_str(), ms,
              v.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "HDes, h, k of the rank 8 example", 1.0, [] {
    const CheckOutcome out = check_hdes_example();
    return Verdict{out.pass, out.pass ? "" : out.witness.dump()};
  });

  criterion(2, "h, k of the rank 9 tableau example", 1.0, [] {
    const CheckOutcome out = check_tableau_example();
    return Verdict{out.pass, out.pass ? "" : out.witness.dump()};
  });

  criterion(3, "old and new descent statistics, r <= 4, n <= 4", 60'000.0,
            [] { return from_report(suite("oldnew", 1'000'000)); });

  criterion(4, "fmaj distribution over G*, r <= 4, n <= 3", 0, [] {
    Verdict v = from_report(suite("coinvariant", 1'000'000));
    const bool hand = format_poly(fmaj_generating_poly({2, 2, 1, 2}, true)) == "1 + 2*t + t^2";
    return merge(v, {hand, hand ? "G(2,1,2,2) gives 1 + 2*t + t^2" : "hand value differs"});
  });

  criterion(5, "projective RS fibers and dimensions, order <= 5000", 0,
            [] { return from_report(suite("projRS", 5000)); });

  criterion(6, "Phi round trips (entries <= 4) and basis counts, order <= 200", 0, [] {
    return merge(from_report(suite("bije", 200, 4)), from_report(suite("card", 200)));
  });

  criterion(7, "averaging verdict against column sums, r <= 4, n <= 3", 0,
            [] { return from_report(suite("colu", 1'000'000)); });

  criterion(8, "diagonal Hilbert series factorization, k = 2, degree <= 8", 300'000.0,
            [] { return from_report(suite("uou", 1'000'000)); });

  criterion(9, "character orthogonality and the symmetric group oracle", 0, [] {
    Verdict v = from_report(suite("orthogonality", 1'000'000));
    std::size_t compared = 0;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
      for (const auto& lambda : oracle::partitions(n, n)) {
        for (const auto& rho : oracle::partitions(n, n)) {
          CycleType type;
          for (int part : rho) type.emplace_back(part, 0);
          const MultiShape shape = {Partition(lambda.begin(), lambda.end())};
          ok = ok && wreath_character(shape, type).as_integer() == oracle::frobenius_character(lambda, rho);
          ++compared;
        }
      }
    }
    return merge(v, {ok, std::to_string(compared) + " S_n values against the Frobenius formula"});
  });

  criterion(10, "product-one tuples against coarse Kronecker sums", 0, [] {
    Verdict v = from_report(suite("maincomb", 500));
    const ShapeClass mu = shape_class({Partition{2, 1}}, 1);
    const std::int64_t c = coarse_kronecker({1, 1, 1, 3}, {mu, mu, mu});
    return merge(v, {c == 1, "S_3 coefficient of (2,1)^3 is " + std::to_string(c)});
  });

  criterion(11, "Galois-twisted series, |G*| <= 2000", 120'000.0,
            [] { return from_report(suite("galois", 2000)); });

  criterion(12, "liftings, scalars and the isomorphism predicate, order <= 5000", 0,
            [] { return from_report(suite("group", 5000)); });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
