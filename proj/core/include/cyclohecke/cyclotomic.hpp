// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_CYCLOTOMIC_HPP
#define CYCLOHECKE_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cyclohecke {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class IncompatibleOrder : public std::invalid_argument {
 public:
  explicit IncompatibleOrder(const std::string& what) : std::invalid_argument(what) {}
};

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
std::vector<long> prime_factors(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_poly_coeffs(long n);

/// zeta_n^k with 0 <= k < n, stored with gcd(n, k) divided out so that
/// order() is the true multiplicative order.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long order, long exponent);

  long order() const { return order_; }
  long exponent() const { return exponent_; }
  RootOfUnity pow(long e) const;
  RootOfUnity operator*(const RootOfUnity& o) const;
  bool operator==(const RootOfUnity& o) const = default;
  std::string to_string() const;

 private:
  long order_ = 1;
  long exponent_ = 0;
};

/// Exact element of Q(zeta_n).
///
/// Canonical form: the order is the smallest n such that the element lies in
/// Q(zeta_n) (never 2 mod 4), and the coefficients are those of the power
/// basis 1, zeta_n, ..., zeta_n^(phi(n)-1) obtained by reducing modulo the
/// cyclotomic polynomial Phi_n. Equality is equality of canonical forms.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)

  static Cyclotomic root(long n, long e);
  static Cyclotomic root(const RootOfUnity& z) { return root(z.order(), z.exponent()); }
  /// Sum of c * zeta_n^e over the map entries, exponents taken mod n.
  static Cyclotomic from_exponents(long n, const std::map<long, Rational>& coeffs);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  /// Requires is_rational().
  const Rational& rational() const;
  bool is_integer() const;

  /// Coefficients of this number in the power basis of Q(zeta_target).
  std::vector<Rational> coeffs_in(long target) const;
  /// Same number, checked to lie in Q(zeta_target).
  Cyclotomic embed(long target) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic inv() const;
  Cyclotomic pow(long e) const;
  /// Image under zeta_n -> zeta_n^k, gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }
  bool is_real() const;
  /// Exact sign of a real number: -1, 0 or 1. Throws for non-real input.
  int sign() const;

  /// Double precision value, for display only.
  std::complex<double> to_complex() const;
  /// GAP-like text, e.g. "-E(8)+E(8)^3" or "-3/2".
  std::string to_string() const;
  /// Strict weak order on canonical forms (for containers).
  bool operator<(const Cyclotomic& o) const;

 private:
  Cyclotomic(long order, std::vector<Rational> c);
  void canonicalize();

  long order_;
  std::vector<Rational> c_;
};

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, char op);
Cyclotomic cyc_inv(const Cyclotomic& a);
Cyclotomic cyc_embed(const Cyclotomic& a, long target_order);
std::complex<double> cyc_to_float(const Cyclotomic& a);

}  // namespace cyclohecke

#endif
