#include "prg/stats.hpp"

#include <sstream>

namespace prg {

StatProfile profile_from_descents(std::span<const bool> descends,
                                  std::span<const int> colors, int r, int step) {
  const int n = static_cast<int>(colors.size());
  StatProfile out;
  out.h.assign(n, 0);
  out.k.assign(n, 0);
  out.lambda.assign(n, 0);
  if (n == 0) return out;

  for (int i = 0; i + 1 < n; ++i) {
    if (residue(colors[i] - colors[i + 1], r) == 0 && descends[i]) {
      out.hdes.push_back(i + 1);
    }
  }
  out.k[n - 1] = residue(colors[n - 1], step);
  for (int i = n - 2; i >= 0; --i) {
    out.k[i] = out.k[i + 1] + residue(colors[i] - colors[i + 1], r);
    out.h[i] = out.h[i + 1];
    if (residue(colors[i] - colors[i + 1], r) == 0 && descends[i]) ++out.h[i];
  }
  for (int i = 0; i < n; ++i) {
    out.lambda[i] = r * out.h[i] + out.k[i];
    out.fmaj += out.lambda[i];
  }
  return out;
}

StatProfile stat_profile(const Element& g) {
  const int n = g.rank();
  RankVector<bool> descends;
  for (int i = 0; i + 1 < n; ++i) descends.push_back(g.sigma()[i] > g.sigma()[i + 1]);
  return profile_from_descents(std::span<const bool>(descends.data(), descends.size()),
                               std::span<const int>(g.colors().data(), g.colors().size()),
                               g.params().r, g.params().scalar_shift());
}

ClassicalDescent classical_fmaj(const Element& g) {
  const GroupParams& gp = g.params();
  if (gp.p != 1 || gp.q != 1) {
    throw std::invalid_argument("classical descents are defined on G(r,1,1,n) only");
  }
  const int n = gp.n;
  const int r = gp.r;
  ClassicalDescent out;
  out.d.assign(n, 0);
  RankVector<bool> is_des(n, false);
  for (int i = 0; i + 1 < n; ++i) {
    const int a = residue(g.colors()[i], r);
    const int b = residue(g.colors()[i + 1], r);
    if (a < b || (a == b && g.sigma()[i] > g.sigma()[i + 1])) {
      is_des[i] = true;
      out.des.push_back(i + 1);
    }
  }
  for (int i = n - 2; i >= 0; --i) out.d[i] = out.d[i + 1] + (is_des[i] ? 1 : 0);
  for (int pos : out.des) out.fmaj += static_cast<long long>(r) * pos;
  for (int c : g.colors()) out.fmaj += residue(c, r);
  return out;
}

RankVector<int> a_exponents(const Element& g) {
  const StatProfile prof = stat_profile(g);
  RankVector<int> exps(g.rank(), 0);
  for (int i = 0; i < g.rank(); ++i) exps[g.sigma()[i]] = prof.lambda[i];
  return exps;
}

UniPoly fmaj_generating_poly(const GroupParams& params, bool over_dual, std::uint64_t cap) {
  const GroupParams target = over_dual ? dual_params(params) : params;
  UniPoly out;
  for_each_element(
      target, [&](const Element& g) { out[static_cast<int>(stat_profile(g).fmaj)] += 1; },
      cap);
  return out;
}

UniPoly q_integer(int m) {
  UniPoly out;
  for (int i = 0; i < m; ++i) out[i] = 1;
  return out;
}

UniPoly poly_multiply(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

UniPoly section_mod(const UniPoly& a, int modulus) {
  UniPoly out;
  for (const auto& [e, c] : a) {
    if (e % modulus == 0) out[e] = c;
  }
  return out;
}

std::string format_poly(const UniPoly& poly, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : poly) {
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  if (first) return "0";
  return os.str();
}

std::vector<std::int64_t> dense_coefficients(const UniPoly& poly) {
  std::vector<std::int64_t> out;
  for (const auto& [e, c] : poly) {
    if (c == 0) continue;
    if (static_cast<int>(out.size()) <= e) out.resize(e + 1, 0);
    out[e] = c;
  }
  if (out.empty()) out.push_back(0);
  return out;
}

}  // namespace prg
