#pragma once

// Exhaustive identity checks over small groups and the report produced by
// the `verify` subcommand.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prg/io.hpp"

namespace prg {

struct CheckOutcome {
  bool pass = true;
  Json witness;  // null when passing; the first counterexample otherwise
};

struct CheckRecord {
  std::string name;
  Json params;
  bool pass = true;
  Json witness;
  double ms = 0;
};

struct VerifyConfig {
  std::uint64_t max_order = 2000;
  /// Largest r swept by the suites whose groups are bounded only by order
  /// (projRS, bije, card, maincomb, galois). Rank 1 and 2 groups of small
  /// order exist for every r, so some cap is needed.
  int max_r = 24;
  /// Largest matrix entry used by the bije suite.
  int bije_max_entry = 3;
  /// Report wall time; when false every "ms" is 0 so reports are
  /// byte-identical between runs.
  bool timing = true;
  std::uint64_t cap = default_enumeration_cap();
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  bool all_passed() const;
  Json to_json() const;
};

/// Valid (r,p,q,n) with r <= max_r, n in ns and order <= max_order, sorted.
std::vector<GroupParams> groups_up_to(int max_r, const std::vector<int>& ns,
                                      std::uint64_t max_order);

/// Times `fn` and wraps the outcome; exceptions become failures.
CheckRecord run_check(const std::string& name, Json params,
                      const std::function<CheckOutcome()>& fn, bool timing = true);

CheckOutcome check_hdes_example();
CheckOutcome check_tableau_example();
/// r h_i + k_i = r d_i + [c_i]_r on every element of G(r,1,1,n).
CheckOutcome check_oldnew(const GroupParams& g);
/// fmaj over G* against the mod-q section of prod [ri]_t [rn/p]_t.
CheckOutcome check_coinvariant(const GroupParams& g);
/// Lifting independence, fiber sizes and the dimension identity.
CheckOutcome check_projrs(const GroupParams& g);
/// phi(phi_inverse(A)) = A on B_k with entries <= max_entry.
CheckOutcome check_bije(const GroupParams& g, int k, int max_entry);
CheckOutcome check_card(const GroupParams& g, int k);
/// Averaging verdict against the column-sum criterion on all k x n
/// matrices with entries <= max_entry and row sums = 0 mod q.
CheckOutcome check_colu(const GroupParams& g, int k, int max_entry);
CheckOutcome check_uou(const GroupParams& g, int k, int bound);
/// Both orthogonality relations and chi(1) = tableau count on G(r,n).
CheckOutcome check_orthogonality(int r, int n);
CheckOutcome check_maincomb(const GroupParams& g, int k);
CheckOutcome check_galois(const GroupParams& g, int d);
/// Lifting counts, scalar count, and the isomorphism predicate against
/// center sizes (n >= 3) and element-order statistics.
CheckOutcome check_group_layer(const GroupParams& g);
/// G(2,2,1,n) is isomorphic to its dual exactly when n is odd.
CheckOutcome check_dn_duality(int n);

std::vector<std::string> verify_suites();
/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
VerifyReport run_verify(const std::string& suite, const VerifyConfig& config);

}  // namespace prg
