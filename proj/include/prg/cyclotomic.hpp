#pragma once

// Exact arithmetic in Z[zeta_r]: integer polynomials in zeta reduced modulo
// the r-th cyclotomic polynomial, so equal numbers have equal coefficients.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace prg {

/// Coefficients of Phi_r, lowest degree first (monic).
const std::vector<std::int64_t>& cyclotomic_polynomial(int r);

class Cyclotomic {
 public:
  /// Zero in Z[zeta_r].
  explicit Cyclotomic(int r = 1);

  static Cyclotomic integer(int r, std::int64_t value);
  static Cyclotomic zeta_power(int r, long long exponent);
  /// sum_i coeffs[i] zeta^i for any number of coefficients.
  static Cyclotomic from_powers(int r, std::span<const std::int64_t> coeffs);

  int modulus() const { return r_; }
  /// Reduced coefficients, length deg Phi_r.
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_integer() const;
  /// Throws std::domain_error when the reduced form is not constant.
  std::int64_t as_integer() const;

  Cyclotomic conj() const;
  /// zeta -> zeta^d.
  Cyclotomic galois(int d) const;
  Cyclotomic times_zeta_power(long long exponent) const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(std::int64_t scalar);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t s) { return a *= s; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  std::string to_string() const;

 private:
  void require_same(const Cyclotomic& other) const;

  int r_;
  std::vector<std::int64_t> c_;
};

}  // namespace prg
