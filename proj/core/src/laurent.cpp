// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/laurent.hpp"

#include <sstream>
#include <utility>

namespace cyclohecke {

LaurentPoly::LaurentPoly(Var v, Terms terms) : var_(v) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::constant(const Cyclotomic& c, Var v) { return monomial(c, 0, v); }

LaurentPoly LaurentPoly::monomial(const Cyclotomic& c, long e, Var v) {
  LaurentPoly p(v);
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Cyclotomic LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

long LaurentPoly::valuation() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.begin()->first;
}

long LaurentPoly::degree() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.rbegin()->first;
}

long LaurentPoly::coefficient_order() const {
  long n = 1;
  for (const auto& [e, c] : terms_) n = lcm_long(n, c.order());
  return n;
}

void LaurentPoly::require_same_var(const LaurentPoly& o) const {
  if (var_ != o.var_) throw VariableMismatch();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_var(o);
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  require_same_var(o);
  Terms out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      auto [it, fresh] = out.try_emplace(e1 + e2, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  }
  *this = LaurentPoly(var_, std::move(out));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return var_ == o.var_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
    const auto& [k, c] = *terms_.begin();
    return monomial(c.pow(e), k * e, var_);
  }
  LaurentPoly result = constant(Cyclotomic(1), var_);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

Cyclotomic LaurentPoly::eval(const Cyclotomic& at) const {
  if (terms_.empty()) return Cyclotomic();
  // Horner in var from the top exponent, then a monomial correction.
  long lo = valuation();
  Cyclotomic acc;
  long prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= at.pow(prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * at.pow(lo);
}

Cyclotomic LaurentPoly::eval(const RootOfUnity& at) const {
  // Collect coefficients per power of the root before multiplying.
  const long n = at.order();
  std::map<long, Cyclotomic> by_power;
  for (const auto& [e, c] : terms_) {
    long k = Integer(Integer(e) * at.exponent() % n).get_si();
    if (k < 0) k += n;
    auto [it, fresh] = by_power.try_emplace(k, c);
    if (!fresh) it->second += c;
  }
  Cyclotomic acc;
  for (const auto& [k, c] : by_power) {
    if (c.is_zero()) continue;
    acc += k == 0 ? c : c * Cyclotomic::root(n, k);
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
  if (k < 1) throw std::invalid_argument("substitute_power needs a positive exponent");
  LaurentPoly r(Var::y);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * k, c);
  return r;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& b) const {
  require_same_var(b);
  if (b.is_zero()) throw DivisionByZero();
  LaurentPoly rem = *this;
  LaurentPoly quot(var_);
  const long db = b.degree();
  const Cyclotomic lead_inv = b.terms_.rbegin()->second.inv();
  while (!rem.is_zero() && rem.degree() >= db) {
    long shift = rem.degree() - db;
    Cyclotomic f = rem.terms_.rbegin()->second * lead_inv;
    quot.terms_.emplace(shift, f);
    for (const auto& [e, c] : b.terms_) {
      long k = e + shift;
      auto it = rem.terms_.find(k);
      if (it == rem.terms_.end()) {
        rem.terms_.emplace(k, -(c * f));
      } else {
        it->second -= c * f;
        if (it->second.is_zero()) rem.terms_.erase(it);
      }
    }
  }
  return {quot, rem};
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
  require_same_var(b);
  if (b.is_zero()) throw DivisionByZero();
  if (is_zero()) return LaurentPoly(var_);
  long va = valuation();
  long vb = b.valuation();
  auto [q, r] = shifted(-va).divmod(b.shifted(-vb));
  if (!r.is_zero()) throw InexactDivision(r.shifted(va).to_string());
  return q.shifted(va - vb);
}

namespace {

// Synthetic division by (var - z); returns false if the remainder is nonzero.
bool divide_linear(const LaurentPoly& p, const Cyclotomic& z, LaurentPoly& out) {
  long lo = p.valuation();
  long hi = p.degree();
  LaurentPoly::Terms q;
  Cyclotomic carry;
  for (long e = hi; e > lo; --e) {
    carry = carry * z + p.coeff(e);
    if (!carry.is_zero()) q.emplace(e - 1, carry);
  }
  Cyclotomic rem = carry * z + p.coeff(lo);
  if (!rem.is_zero()) return false;
  out = LaurentPoly(p.var(), std::move(q));
  return true;
}

}  // namespace

long LaurentPoly::vanishing_order(const RootOfUnity& at) const {
  if (is_zero()) throw ZeroPolynomial();
  const Cyclotomic z = Cyclotomic::root(at);
  LaurentPoly cur = shifted(-valuation());
  long k = 0;
  LaurentPoly next(var_);
  while (cur.degree() > 0 && divide_linear(cur, z, next)) {
    cur = std::move(next);
    ++k;
  }
  return k;
}

LaurentPoly LaurentPoly::strip_root(const RootOfUnity& at, long k) const {
  if (is_zero()) throw ZeroPolynomial();
  const Cyclotomic z = Cyclotomic::root(at);
  long v = valuation();
  LaurentPoly cur = shifted(-v);
  for (long i = 0; i < k; ++i) {
    LaurentPoly next(var_);
    if (cur.degree() == 0 || !divide_linear(cur, z, next))
      throw InexactDivision("(" + std::string(1, static_cast<char>(var_)) + " - " + at.to_string() +
                            ") does not divide");
    cur = std::move(next);
  }
  return cur.shifted(v);
}

LaurentPoly LaurentPoly::galois(long k) const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, c.galois(k));
  return LaurentPoly(var_, std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const char v = static_cast<char>(var_);
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.to_string();
    bool compound = !c.is_rational() && (cs.find('+', 1) != std::string::npos ||
                                         cs.find('-', 1) != std::string::npos);
    if (compound) cs = "(" + cs + ")";
    if (!first) {
      if (cs[0] == '-') {
        os << '-';
        cs.erase(0, 1);
      } else {
        os << '+';
      }
    }
    if (e == 0) {
      os << cs;
    } else {
      if (cs == "-1") {
        os << '-';
      } else if (cs != "1") {
        os << cs << '*';
      }
      os << v;
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly cyclotomic_poly(long d, Var v) {
  const auto& co = cyclotomic_poly_coeffs(d);
  LaurentPoly::Terms t;
  for (size_t k = 0; k < co.size(); ++k)
    if (co[k] != 0) t.emplace(static_cast<long>(k), Cyclotomic(Rational(co[k])));
  return LaurentPoly(v, std::move(t));
}

namespace {

LaurentPoly strip_and_normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shifted(-p.valuation());
  return r * r.terms().rbegin()->second.inv();
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var()) throw VariableMismatch();
  LaurentPoly x = strip_and_normalize(a);
  LaurentPoly y = strip_and_normalize(b);
  while (!y.is_zero()) {
    LaurentPoly r = x.divmod(y).second;
    x = std::move(y);
    y = strip_and_normalize(r);
  }
  return strip_and_normalize(x);
}

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = strip_and_normalize(a);
  LaurentPoly y = strip_and_normalize(b);
  if (x.is_zero() || y.is_zero()) return LaurentPoly(a.var());
  return strip_and_normalize((x * y).exact_div(poly_gcd(x, y)));
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, char op) {
  switch (op) {
    case '+':
      return a + b;
    case '-':
      return a - b;
    case '*':
      return a * b;
    default:
      throw std::invalid_argument(std::string("unknown operation '") + op + "'");
  }
}

Cyclotomic lp_eval(const LaurentPoly& p, const RootOfUnity& at) { return p.eval(at); }
long lp_valuation(const LaurentPoly& p) { return p.valuation(); }
LaurentPoly substitute_power(const LaurentPoly& p, long k) {
  if (p.var() != Var::q) throw VariableMismatch();
  return p.substitute_power(k);
}
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) { return a.exact_div(b); }
long vanishing_order(const LaurentPoly& p, const RootOfUnity& at) {
  return p.vanishing_order(at);
}

}  // namespace cyclohecke
