#include "prg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "prg/characters.hpp"
#include "prg/diagonal.hpp"
#include "prg/galois.hpp"
#include "prg/rs.hpp"

namespace prg {

namespace {

CheckOutcome fail(Json witness) { return CheckOutcome{false, std::move(witness)}; }

Json matrix_to_json(const KPartiteMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a.rows) out.push_back(std::vector<int>(row.begin(), row.end()));
  return out;
}

std::vector<int> to_vec(const RankVector<int>& v) { return {v.begin(), v.end()}; }

int element_order(const Element& g) {
  Element x = g;
  int order = 1;
  while (!x.is_identity()) {
    x = multiply(x, g);
    ++order;
  }
  return order;
}

std::map<int, std::uint64_t> order_histogram(const std::vector<Element>& elements) {
  std::map<int, std::uint64_t> out;
  for (const auto& e : elements) ++out[element_order(e)];
  return out;
}

std::uint64_t center_size(const std::vector<Element>& elements, const GroupParams& g) {
  const auto gens = generators(g);
  std::uint64_t count = 0;
  for (const auto& e : elements) {
    bool central = true;
    for (const auto& s : gens) {
      if (!(multiply(e, s) == multiply(s, e))) {
        central = false;
        break;
      }
    }
    if (central) ++count;
  }
  return count;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back(Json{{"name", c.name},
                        {"params", c.params},
                        {"status", c.pass ? "pass" : "fail"},
                        {"witness", c.witness},
                        {"ms", c.ms}});
  }
  return Json{{"version", 1}, {"checks", list}};
}

std::vector<GroupParams> groups_up_to(int max_r, const std::vector<int>& ns,
                                      std::uint64_t max_order) {
  std::vector<GroupParams> out;
  for (int n : ns) {
    for (int r = 1; r <= max_r; ++r) {
      for (int p = 1; p <= r; ++p) {
        if (r % p) continue;
        for (int q = 1; q <= r; ++q) {
          if (r % q || (r * n) % (p * q)) continue;
          const GroupParams g{r, p, q, n};
          if (g.order() <= max_order) out.push_back(g);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupParams& a, const GroupParams& b) {
    return std::tie(a.n, a.r, a.p, a.q) < std::tie(b.n, b.r, b.p, b.q);
  });
  return out;
}

CheckRecord run_check(const std::string& name, Json params,
                      const std::function<CheckOutcome()>& fn, bool timing) {
  CheckRecord rec{name, std::move(params), true, nullptr, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    CheckOutcome out = fn();
    rec.pass = out.pass;
    rec.witness = out.pass ? Json(nullptr) : std::move(out.witness);
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.witness = Json{{"error", e.what()}};
  }
  if (timing) {
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  }
  return rec;
}

CheckOutcome check_hdes_example() {
  const GroupParams g = validate_params(6, 2, 3, 8);
  const Element e = parse_element("2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2", g);
  const StatProfile prof = stat_profile(e);
  const bool ok = to_vec(prof.hdes) == std::vector<int>{2, 5} &&
                  to_vec(prof.h) == std::vector<int>{2, 2, 1, 1, 1, 0, 0, 0} &&
                  to_vec(prof.k) == std::vector<int>{18, 13, 13, 9, 5, 5, 1, 0};
  return ok ? CheckOutcome{} : fail(profile_to_json(prof));
}

CheckOutcome check_tableau_example() {
  const MultiTableau t = {{{1, 4}, {5}}, {{2, 8}, {3, 9}}, {{6, 7}}};
  const StatProfile prof = tableau_stats(t, 3);
  const bool ok = to_vec(prof.h) == std::vector<int>{3, 3, 2, 2, 1, 1, 1, 1, 0} &&
                  to_vec(prof.k) == std::vector<int>{5, 3, 3, 2, 2, 1, 1, 0, 0};
  return ok ? CheckOutcome{} : fail(profile_to_json(prof));
}

CheckOutcome check_oldnew(const GroupParams& g) {
  CheckOutcome out;
  for_each_element(g, [&](const Element& e) {
    if (!out.pass) return;
    const StatProfile prof = stat_profile(e);
    const ClassicalDescent cd = classical_fmaj(e);
    for (int i = 0; i < g.n; ++i) {
      if (g.r * prof.h[i] + prof.k[i] != g.r * cd.d[i] + residue(e.colors()[i], g.r)) {
        out = fail(Json{{"element", format_element(e)}, {"position", i + 1}});
        return;
      }
    }
  });
  return out;
}

CheckOutcome check_coinvariant(const GroupParams& g) {
  const UniPoly computed = fmaj_generating_poly(g, true);
  UniPoly expected = q_integer(g.r * g.n / g.p);
  for (int i = 1; i < g.n; ++i) expected = poly_multiply(expected, q_integer(g.r * i));
  expected = section_mod(expected, g.q);
  if (computed == expected) return {};
  return fail(Json{{"computed", format_poly(computed)}, {"expected", format_poly(expected)}});
}

CheckOutcome check_projrs(const GroupParams& g) {
  std::map<std::pair<MultiTableau, MultiTableau>, std::uint64_t> fibers;
  std::map<std::pair<MultiTableau, MultiTableau>, ShapeClass> pair_class;
  CheckOutcome out;
  for_each_element(g, [&](const Element& e) {
    if (!out.pass) return;
    const ProjectiveRs pr = projective_rs(e);
    for (const auto& lift : liftings(e, g.p)) {
      const MultiTableauPair sw = stanton_white(lift.sigma, lift.colors, g.r);
      if (!(canonical_tableau(sw.P, g.q) == pr.P) || !(canonical_tableau(sw.Q, g.q) == pr.Q)) {
        out = fail(Json{{"lifting_dependent", format_element(e)}});
        return;
      }
    }
    if (!(shape_class(shape_of(pr.Q), g.q) == pr.shape)) {
      out = fail(Json{{"shape_mismatch", format_element(e)}});
      return;
    }
    auto key = std::make_pair(pr.P, pr.Q);
    ++fibers[key];
    pair_class.emplace(key, pr.shape);
  });
  if (!out.pass) return out;

  std::map<MultiShape, std::uint64_t> pairs_per_class;
  for (const auto& [key, count] : fibers) {
    const ShapeClass& mu = pair_class.at(key);
    if (count != static_cast<std::uint64_t>(mu.stabilizer_order)) {
      return fail(Json{{"shape", shape_to_json(mu.representative)},
                       {"fiber", count},
                       {"stabilizer", mu.stabilizer_order}});
    }
    ++pairs_per_class[mu.representative];
  }
  std::uint64_t dimension_sum = 0;
  const auto classes = enumerate_fer_classes(g.r, g.p, g.q, g.n);
  for (const auto& mu : classes) {
    const std::uint64_t st = class_tableau_count(mu);
    dimension_sum += static_cast<std::uint64_t>(mu.stabilizer_order) * st * st;
    const auto it = pairs_per_class.find(mu.representative);
    const std::uint64_t seen = it == pairs_per_class.end() ? 0 : it->second;
    if (seen != st * st) {
      return fail(Json{{"shape", shape_to_json(mu.representative)},
                       {"pairs", seen},
                       {"expected_pairs", st * st}});
    }
  }
  if (pairs_per_class.size() != classes.size() || dimension_sum != g.order()) {
    return fail(Json{{"dimension_sum", dimension_sum}, {"order", g.order()}});
  }
  return out;
}

CheckOutcome check_bije(const GroupParams& g, int k, int max_entry) {
  const GroupParams dual = dual_params(g);
  CheckOutcome out;
  for_each_kpartite(k, g.n, max_entry, std::nullopt, [&](const KPartiteMatrix& a) {
    if (!out.pass || !in_basis_set(a, g)) return;
    try {
      const PhiTuple t = phi_inverse(a, g);
      for (const auto& e : t.gs) {
        if (!(e.params() == dual)) throw std::logic_error("element outside G*");
      }
      if (!(phi(t) == a)) throw std::logic_error("round trip changed the matrix");
    } catch (const std::exception& ex) {
      out = fail(Json{{"matrix", matrix_to_json(a)}, {"error", ex.what()}});
    }
  });
  return out;
}

CheckOutcome check_card(const GroupParams& g, int k) {
  std::uint64_t expected = 1;
  for (int i = 1; i < k; ++i) expected *= g.order();
  const std::uint64_t counted = count_basis(g, k);
  if (counted == expected) return {};
  return fail(Json{{"counted", counted}, {"expected", expected}});
}

CheckOutcome check_colu(const GroupParams& g, int k, int max_entry) {
  const int cells = k * g.n;
  std::vector<int> digits(cells, 0);
  while (true) {
    KPartiteMatrix a(k, g.n);
    for (int c = 0; c < cells; ++c) a.rows[c / g.n][c % g.n] = digits[c];
    bool rows_ok = true;
    for (int i = 0; i < k; ++i) rows_ok = rows_ok && a.row_sum(i) % g.q == 0;
    if (rows_ok) {
      const bool averaged = average_monomial(a, g).nonzero;
      if (averaged != colu_criterion(a, g)) {
        return fail(Json{{"matrix", matrix_to_json(a)}, {"average_nonzero", averaged}});
      }
    }
    int c = cells - 1;
    while (c >= 0 && digits[c] == max_entry) digits[c--] = 0;
    if (c < 0) break;
    ++digits[c];
  }
  return {};
}

CheckOutcome check_uou(const GroupParams& g, int k, int bound) {
  const UouResult res = uou_check(g, k, bound);
  if (res.equal) return {};
  return fail(Json{{"first_difference", *res.witness}});
}

CheckOutcome check_orthogonality(int r, int n) {
  const std::uint64_t order = validate_params(r, 1, 1, n).order();
  const auto classes = cycle_classes(r, 1, n);
  const auto shapes = enumerate_fer(r, 1, n);
  if (classes.size() != shapes.size()) {
    return fail(Json{{"classes", classes.size()}, {"irreducibles", shapes.size()}});
  }
  CharacterEngine engine(r);
  std::vector<std::vector<Cyclotomic>> table;
  const CycleType identity_type(n, {1, 0});
  for (const auto& mu : shapes) {
    std::vector<Cyclotomic> row;
    for (const auto& c : classes) row.push_back(engine.value(mu, c.type));
    table.push_back(std::move(row));
    const auto dim = engine.value(mu, identity_type).as_integer();
    if (dim != static_cast<std::int64_t>(count_tableaux(mu))) {
      return fail(Json{{"shape", shape_to_json(mu)}, {"degree", dim}});
    }
  }
  const std::size_t m = shapes.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Cyclotomic sum(r);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        sum += table[a][c] * table[b][c].conj() * static_cast<std::int64_t>(classes[c].size);
      }
      const Cyclotomic want = Cyclotomic::integer(r, a == b ? static_cast<std::int64_t>(order) : 0);
      if (!(sum == want)) {
        return fail(Json{{"first_relation", {shape_to_json(shapes[a]), shape_to_json(shapes[b])}}});
      }
    }
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t d = 0; d < classes.size(); ++d) {
      Cyclotomic sum(r);
      for (std::size_t a = 0; a < m; ++a) sum += table[a][c] * table[a][d].conj();
      const std::int64_t want =
          c == d ? static_cast<std::int64_t>(order / classes[c].size) : 0;
      if (!(sum == Cyclotomic::integer(r, want))) {
        return fail(Json{{"second_relation", {c, d}}});
      }
    }
  }
  return {};
}

CheckOutcome check_maincomb(const GroupParams& g, int k) {
  const MaincombResult res = maincomb_check(g, k);
  if (res.equal) return {};
  return fail(Json{{"first_difference", *res.witness}});
}

CheckOutcome check_galois(const GroupParams& g, int d) {
  const GaloisResult res = galois_check(g, d);
  if (res.equal) return {};
  return fail(Json{{"first_difference", *res.witness}});
}

CheckOutcome check_group_layer(const GroupParams& g) {
  const std::vector<Element> elements = enumerate_group(g);
  if (elements.size() != g.order()) {
    return fail(Json{{"enumerated", elements.size()}, {"order", g.order()}});
  }
  const long long rn_q = static_cast<long long>(g.r) * g.n / g.q;
  for (int pp = 1; pp <= g.r; ++pp) {
    if (g.r % pp) continue;
    const long long d = std::gcd(rn_q, static_cast<long long>(pp));
    if (g.p % d) continue;
    const std::size_t expected = static_cast<std::size_t>(g.q * d / pp);
    for (const auto& e : elements) {
      const auto lifts = liftings(e, pp);
      bool ok = lifts.size() == expected;
      for (const auto& l : lifts) {
        ok = ok && canonicalize(l.sigma, l.colors, g) == e &&
             residue(std::accumulate(l.colors.begin(), l.colors.end(), 0LL), pp) == 0;
      }
      if (!ok) {
        return fail(Json{{"element", format_element(e)},
                         {"p_prime", pp},
                         {"liftings", lifts.size()},
                         {"expected", expected}});
      }
    }
  }

  std::uint64_t scalars = 0;
  for (const auto& e : elements) {
    bool scalar = true;
    for (int i = 0; i < g.n; ++i) {
      scalar = scalar && e.sigma()[i] == i && e.colors()[i] == e.colors()[0];
    }
    if (scalar) ++scalars;
  }
  if (scalars != static_cast<std::uint64_t>(scalar_count(g))) {
    return fail(Json{{"scalars", scalars}, {"formula", scalar_count(g)}});
  }
  if (g.n == 2) return {};

  const GroupParams dual = dual_params(g);
  const std::vector<Element> dual_elements = enumerate_group(dual);
  const bool predicate = is_isomorphic_to_dual(g);
  if (g.n >= 3) {
    const std::uint64_t z = center_size(elements, g);
    const std::uint64_t z_dual = center_size(dual_elements, dual);
    if (z != static_cast<std::uint64_t>(scalar_count(g)) ||
        z_dual != static_cast<std::uint64_t>(scalar_count(dual))) {
      return fail(Json{{"center", z}, {"center_dual", z_dual}});
    }
    if (predicate != (z == z_dual)) {
      return fail(Json{{"predicate", predicate}, {"center", z}, {"center_dual", z_dual}});
    }
  }
  if (predicate && order_histogram(elements) != order_histogram(dual_elements)) {
    return fail(Json{{"predicate", predicate}, {"order_statistics", "differ"}});
  }
  return {};
}

CheckOutcome check_dn_duality(int n) {
  const GroupParams g = validate_params(2, 2, 1, n);
  const bool predicate = is_isomorphic_to_dual(g);
  const std::uint64_t z = center_size(enumerate_group(g), g);
  const GroupParams dual = dual_params(g);
  const std::uint64_t z_dual = center_size(enumerate_group(dual), dual);
  if (predicate == (n % 2 == 1) && predicate == (z == z_dual)) return {};
  return fail(Json{{"predicate", predicate}, {"center", z}, {"center_dual", z_dual}});
}

std::vector<std::string> verify_suites() {
  return {"bije",     "card",   "coinvariant", "colu",          "galois",
          "group",    "hdes_example", "maincomb", "oldnew", "orthogonality",
          "projRS",   "tableau_example", "uou"};
}

VerifyReport run_verify(const std::string& suite, const VerifyConfig& config) {
  const auto names = verify_suites();
  VerifyReport report;
  if (suite == "all") {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& name : sorted) {
      auto part = run_verify(name, config);
      for (auto& c : part.checks) report.checks.push_back(std::move(c));
    }
    return report;
  }
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown verify suite \"" + suite + "\"");
  }
  const std::uint64_t m = config.max_order;
  auto add = [&](const std::string& name, Json params, const std::function<CheckOutcome()>& fn) {
    report.checks.push_back(run_check(name, std::move(params), fn, config.timing));
  };
  const std::vector<int> ranks = {1, 2, 3, 4, 5, 6};

  if (suite == "hdes_example") {
    add(suite, params_to_json({6, 2, 3, 8}), check_hdes_example);
  } else if (suite == "tableau_example") {
    add(suite, Json{{"r", 3}, {"p", 1}, {"q", 3}, {"n", 9}}, check_tableau_example);
  } else if (suite == "oldnew") {
    for (const auto& g : groups_up_to(4, {1, 2, 3, 4}, m)) {
      if (g.p == 1 && g.q == 1) add(suite, params_to_json(g), [g] { return check_oldnew(g); });
    }
  } else if (suite == "coinvariant") {
    for (const auto& g : groups_up_to(4, {1, 2, 3}, m)) {
      add(suite, params_to_json(g), [g] { return check_coinvariant(g); });
    }
  } else if (suite == "projRS") {
    for (const auto& g : groups_up_to(config.max_r, ranks, std::min<std::uint64_t>(m, 5000))) {
      add(suite, params_to_json(g), [g] { return check_projrs(g); });
    }
  } else if (suite == "bije" || suite == "card") {
    for (const auto& g : groups_up_to(config.max_r, ranks, std::min<std::uint64_t>(m, 200))) {
      for (int k = 1; k <= 3; ++k) {
        Json params = params_to_json(g);
        params["k"] = k;
        if (suite == "bije") {
          params["max_entry"] = config.bije_max_entry;
          const int e = config.bije_max_entry;
          add(suite, params, [g, k, e] { return check_bije(g, k, e); });
        } else {
          add(suite, params, [g, k] { return check_card(g, k); });
        }
      }
    }
  } else if (suite == "colu") {
    for (const auto& g : groups_up_to(4, {1, 2, 3}, m)) {
      for (int k = 1; k <= 2; ++k) {
        Json params = params_to_json(g);
        params["k"] = k;
        add(suite, params, [g, k] { return check_colu(g, k, 3); });
      }
    }
  } else if (suite == "uou") {
    for (const auto& g : std::vector<GroupParams>{{2, 1, 1, 2}, {2, 2, 1, 2}, {2, 1, 2, 2},
                                                  {3, 1, 1, 2}}) {
      Json params = params_to_json(g);
      params["k"] = 2;
      params["bound"] = 8;
      add(suite, params, [g] { return check_uou(g, 2, 8); });
    }
  } else if (suite == "orthogonality") {
    for (const auto& g : groups_up_to(3, {1, 2, 3}, m)) {
      if (g.p == 1 && g.q == 1) {
        add(suite, params_to_json(g), [g] { return check_orthogonality(g.r, g.n); });
      }
    }
  } else if (suite == "maincomb") {
    for (const auto& g : groups_up_to(config.max_r, ranks, std::min<std::uint64_t>(m, 500))) {
      Json params = params_to_json(g);
      params["k"] = 2;
      add(suite, params, [g] { return check_maincomb(g, 2); });
    }
    for (const auto& g : std::vector<GroupParams>{{1, 1, 1, 3}, {2, 1, 1, 2}}) {
      Json params = params_to_json(g);
      params["k"] = 3;
      add(suite, params, [g] { return check_maincomb(g, 3); });
    }
  } else if (suite == "galois") {
    for (const auto& g : groups_up_to(config.max_r, ranks, std::min<std::uint64_t>(m, 2000))) {
      for (int d = 1; d <= g.r; ++d) {
        if (std::gcd(d, g.r) != 1 || (d == g.r && g.r > 1)) continue;
        Json params = params_to_json(g);
        params["d"] = d;
        add(suite, params, [g, d] { return check_galois(g, d); });
      }
    }
  } else if (suite == "group") {
    for (const auto& g : groups_up_to(6, {1, 3, 4}, std::min<std::uint64_t>(m, 5000))) {
      add(suite, params_to_json(g), [g] { return check_group_layer(g); });
    }
    for (int n = 3; n <= 5; ++n) {
      if (validate_params(2, 2, 1, n).order() > m) break;
      Json params = params_to_json({2, 2, 1, n});
      params["case"] = "D_n";
      add(suite, params, [n] { return check_dn_duality(n); });
    }
  }
  return report;
}

}  // namespace prg
