// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_LAURENT_HPP
#define CYCLOHECKE_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "cyclohecke/cyclotomic.hpp"

namespace cyclohecke {

enum class Var : char { y = 'y', q = 'q' };

class VariableMismatch : public std::invalid_argument {
 public:
  VariableMismatch() : std::invalid_argument("Laurent polynomials in different variables") {}
};

class ZeroPolynomial : public std::domain_error {
 public:
  ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};

class LaurentPoly;

class InexactDivision : public std::domain_error {
 public:
  explicit InexactDivision(const std::string& remainder)
      : std::domain_error("inexact division, remainder " + remainder), remainder_(remainder) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

/// Laurent polynomial with Cyclotomic coefficients; zero terms are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<long, Cyclotomic>;

  explicit LaurentPoly(Var v = Var::q) : var_(v) {}
  LaurentPoly(Var v, Terms terms);
  static LaurentPoly constant(const Cyclotomic& c, Var v = Var::q);
  static LaurentPoly monomial(const Cyclotomic& c, long e, Var v = Var::q);
  static LaurentPoly variable(Var v = Var::q) { return monomial(Cyclotomic(1), 1, v); }

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of var^e (zero if absent).
  Cyclotomic coeff(long e) const;
  /// Smallest exponent present. Throws ZeroPolynomial.
  long valuation() const;
  /// Largest exponent present. Throws ZeroPolynomial.
  long degree() const;
  /// lcm of the orders of all coefficients.
  long coefficient_order() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Cyclotomic& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Cyclotomic& c) { return a *= c; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(long e) const;
  /// Multiplies by var^k.
  LaurentPoly shifted(long k) const;
  Cyclotomic eval(const Cyclotomic& at) const;
  Cyclotomic eval(const RootOfUnity& at) const;
  /// Every exponent e becomes e*k and the variable becomes y.
  LaurentPoly substitute_power(long k) const;
  /// Exact quotient; throws InexactDivision.
  LaurentPoly exact_div(const LaurentPoly& b) const;
  /// Quotient and remainder for ordinary polynomials (nonnegative exponents).
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& b) const;
  /// Multiplicity of (var - at) as a factor.
  long vanishing_order(const RootOfUnity& at) const;
  /// This polynomial divided by (var - at)^k; throws InexactDivision.
  LaurentPoly strip_root(const RootOfUnity& at, long k) const;
  /// Coefficientwise image of a Galois automorphism.
  LaurentPoly galois(long k) const;

  std::string to_string() const;

 private:
  void require_same_var(const LaurentPoly& o) const;

  Var var_;
  Terms terms_;
};

LaurentPoly cyclotomic_poly(long d, Var v = Var::y);

/// Monic gcd of the polynomial parts (monomial factors removed).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Monic lcm of the polynomial parts (monomial factors removed).
LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, char op);
Cyclotomic lp_eval(const LaurentPoly& p, const RootOfUnity& at);
long lp_valuation(const LaurentPoly& p);
LaurentPoly substitute_power(const LaurentPoly& p, long k);
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);
long vanishing_order(const LaurentPoly& p, const RootOfUnity& at);

}  // namespace cyclohecke

#endif
