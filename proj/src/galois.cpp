#include "prg/galois.hpp"

#include <numeric>
#include <stdexcept>

#include "prg/characters.hpp"
#include "prg/stats.hpp"

namespace prg {

namespace {

ShapeClass reindex(const ShapeClass& mu, long long d) {
  const int r = mu.modulus();
  MultiShape shape(r);
  for (int i = 0; i < r; ++i) shape[residue(d * i, r)] = mu.representative[i];
  return shape_class(shape, mu.quotient());
}

}  // namespace

ShapeClass sigma_on_shape(const ShapeClass& mu, int d) {
  if (std::gcd(d, mu.modulus()) != 1) throw std::invalid_argument("d must be coprime to r");
  return reindex(mu, d);
}

ShapeClass conjugate_shape(const ShapeClass& mu) { return reindex(mu, -1); }

PartitionSeries gsigma_combinatorial(const GroupParams& g, int d,
                                     std::optional<int> degree_bound, std::uint64_t cap) {
  if (std::gcd(d, g.r) != 1) throw std::invalid_argument("d must be coprime to r");
  PartitionSeries out(2, g.n, degree_bound);
  for_each_element(dual_params(g), [&](const Element& e) {
    out.add({stat_profile(galois_act(e, d)).lambda, stat_profile(inverse(e)).lambda}, 1);
  }, cap);
  return out;
}

PartitionSeries gsigma_representation(const GroupParams& g, int d,
                                      std::optional<int> degree_bound) {
  if (std::gcd(d, g.r) != 1) throw std::invalid_argument("d must be coprime to r");
  PartitionSeries out(2, g.n, degree_bound);
  for (const auto& mu : enumerate_fer_classes(g.r, g.q, g.p, g.n)) {
    const PartitionSeries left = fake_degree_poly(sigma_on_shape(mu, d));
    const PartitionSeries right = fake_degree_poly(conjugate_shape(mu));
    const PartitionSeries term = PartitionSeries::tensor({left, right}, degree_bound);
    for (const auto& [exps, coef] : term.terms()) out.add(exps, coef * mu.stabilizer_order);
  }
  return out;
}

GaloisResult galois_check(const GroupParams& g, int d, std::optional<int> degree_bound,
                          std::uint64_t cap) {
  GaloisResult out{false, gsigma_combinatorial(g, d, degree_bound, cap),
                   gsigma_representation(g, d, degree_bound), std::nullopt};
  out.witness = PartitionSeries::first_difference(out.combinatorial, out.representation);
  out.equal = !out.witness.has_value();
  return out;
}

}  // namespace prg
