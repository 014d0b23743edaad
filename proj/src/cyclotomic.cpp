#include "prg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prg {

namespace {

using Coeffs = std::vector<std::int64_t>;

// Exact division of a by the monic polynomial b.
Coeffs divide_exact(const Coeffs& a, const Coeffs& b) {
  Coeffs rem = a;
  const std::size_t db = b.size() - 1;
  Coeffs quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = rem[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (std::int64_t v : rem) {
    if (v != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

Coeffs multiply_polys(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Reduces an arbitrary polynomial modulo Phi_r into deg Phi_r coefficients.
Coeffs reduce(Coeffs a, int r) {
  const Coeffs& phi = cyclotomic_polynomial(r);
  const std::size_t m = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > m;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) a[i - m + j] -= c * phi[j];
  }
  a.resize(m, 0);
  return a;
}

}  // namespace

const Coeffs& cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  static std::mutex mutex;
  static std::map<int, Coeffs> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(r); it != cache.end()) return it->second;

  // x^r - 1 divided by Phi_d for every proper divisor d of r.
  Coeffs poly(r + 1, 0);
  poly[0] = -1;
  poly[r] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    Coeffs phi_d;
    if (auto it = cache.find(d); it != cache.end()) {
      phi_d = it->second;
    } else {
      // Compute recursively without holding iterators across insertions.
      Coeffs pd(d + 1, 0);
      pd[0] = -1;
      pd[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e == 0) pd = divide_exact(pd, cache.at(e));
      }
      cache.emplace(d, pd);
      phi_d = pd;
    }
    poly = divide_exact(poly, phi_d);
  }
  return cache.emplace(r, poly).first->second;
}

Cyclotomic::Cyclotomic(int r) : r_(r), c_(cyclotomic_polynomial(r).size() - 1, 0) {}

Cyclotomic Cyclotomic::integer(int r, std::int64_t value) {
  Cyclotomic out(r);
  out.c_[0] = value;
  return out;
}

Cyclotomic Cyclotomic::zeta_power(int r, long long exponent) {
  Coeffs powers(r, 0);
  powers[((exponent % r) + r) % r] = 1;
  return from_powers(r, powers);
}

Cyclotomic Cyclotomic::from_powers(int r, std::span<const std::int64_t> coeffs) {
  Cyclotomic out(r);
  Coeffs a(coeffs.begin(), coeffs.end());
  if (a.empty()) return out;
  out.c_ = reduce(std::move(a), r);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::int64_t Cyclotomic::as_integer() const {
  if (!is_integer()) throw std::domain_error("cyclotomic number is not a rational integer");
  return c_[0];
}

Cyclotomic Cyclotomic::galois(int d) const {
  if (std::gcd(d, r_) != 1) throw std::invalid_argument("Galois exponent must be coprime to r");
  Coeffs powers(r_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const long long e = (static_cast<long long>(i) * d) % r_;
    powers[(e + r_) % r_] += c_[i];
  }
  return from_powers(r_, powers);
}

Cyclotomic Cyclotomic::conj() const { return galois(r_ - 1); }

Cyclotomic Cyclotomic::times_zeta_power(long long exponent) const {
  const int shift = static_cast<int>(((exponent % r_) + r_) % r_);
  if (shift == 0) return *this;
  Coeffs powers(r_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) powers[(i + shift) % r_] += c_[i];
  return from_powers(r_, powers);
}

void Cyclotomic::require_same(const Cyclotomic& other) const {
  if (r_ != other.r_) throw std::invalid_argument("cyclotomic moduli differ");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  require_same(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t scalar) {
  for (auto& v : c_) v *= scalar;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same(b);
  Cyclotomic out(a.r_);
  out.c_ = reduce(multiply_polys(a.c_, b.c_), a.r_);
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

}  // namespace prg
