// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace cyclohecke {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s[0] == '+') s.erase(0, 1);
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw DivisionByZero();
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Reduces a polynomial (constant term first) modulo Phi_n in place; the
// result has length phi(n).
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long n) {
  const auto& phi = cyclotomic_poly_coeffs(n);
  const size_t d = phi.size() - 1;
  for (size_t top = poly.size(); top-- > d;) {
    if (poly[top] == 0) continue;
    Rational lead = poly[top];
    for (size_t k = 0; k < d; ++k) {
      if (phi[k] != 0) poly[top - d + k] -= lead * phi[k];
    }
    poly[top] = 0;
  }
  poly.resize(d);
  return poly;
}

// Power-basis coefficients of zeta_n^k.
std::vector<Rational> root_coeffs(long n, long k) {
  std::vector<Rational> v(static_cast<size_t>(n));
  v[static_cast<size_t>(mod(k, n))] = 1;
  return reduce_mod_phi(std::move(v), n);
}

// Solves the square system a x = b over Q. Returns false if singular.
// Rows are scaled to integers and eliminated fraction-free (Bareiss,
// Gauss-Jordan form), so every division below is exact.
bool solve_square(const std::vector<std::vector<Rational>>& a, std::vector<Rational>& b) {
  const size_t n = a.size();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
  for (size_t r = 0; r < n; ++r) {
    Integer l = b[r].get_den();
    for (const auto& x : a[r]) l = lcm(l, Integer(x.get_den()));
    for (size_t j = 0; j < n; ++j) m[r][j] = a[r][j].get_num() * (l / a[r][j].get_den());
    m[r][n] = b[r].get_num() * (l / b[r].get_den());
  }
  Integer prev = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[k]);
    const Integer& pivot = m[k][k];
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer f = m[i][k];
      for (size_t j = k + 1; j <= n; ++j) {
        Integer v = pivot * m[i][j];
        if (f != 0) v -= f * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    prev = pivot;
  }
  for (size_t r = 0; r < n; ++r) {
    b[r] = Rational(m[r][n], prev);
    b[r].canonicalize();
  }
  return true;
}

// Data for testing membership of an element of Q(zeta_big) in Q(zeta_small).
struct Subfield {
  std::vector<std::vector<Rational>> basis;  // basis[j] = zeta_small^j in Q(zeta_big)
  std::vector<size_t> pivots;                // rows forming an invertible minor
  std::vector<std::vector<Rational>> minor_inv;
};

const Subfield& subfield(long big, long small) {
  thread_local std::map<std::pair<long, long>, Subfield> cache;
  auto key = std::make_pair(big, small);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Subfield s;
  const long step = big / small;
  const long ds = euler_phi(small);
  const long db = euler_phi(big);
  for (long j = 0; j < ds; ++j) s.basis.push_back(root_coeffs(big, j * step));
  // Row echelon on the transpose to pick pivot rows.
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(db),
                                          std::vector<Rational>(static_cast<size_t>(ds)));
  for (long r = 0; r < db; ++r)
    for (long j = 0; j < ds; ++j) rows[r][j] = s.basis[j][r];
  std::vector<std::vector<Rational>> work;
  for (long r = 0; r < db && static_cast<long>(s.pivots.size()) < ds; ++r) {
    std::vector<Rational> v = rows[r];
    for (auto& w : work) {
      size_t lead = 0;
      while (w[lead] == 0) ++lead;
      if (v[lead] != 0) {
        Rational f = v[lead] / w[lead];
        for (long j = 0; j < ds; ++j) v[j] -= f * w[j];
      }
    }
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) {
      work.push_back(v);
      s.pivots.push_back(static_cast<size_t>(r));
    }
  }
  // Invert the pivot minor column by column.
  std::vector<std::vector<Rational>> minor;
  for (size_t p : s.pivots) minor.push_back(rows[p]);
  s.minor_inv.assign(static_cast<size_t>(ds), std::vector<Rational>(static_cast<size_t>(ds)));
  for (long k = 0; k < ds; ++k) {
    std::vector<Rational> e(static_cast<size_t>(ds));
    e[k] = 1;
    solve_square(minor, e);
    for (long j = 0; j < ds; ++j) s.minor_inv[j][k] = e[j];
  }
  return cache.emplace(key, std::move(s)).first->second;
}

bool descend(long big, long small, const std::vector<Rational>& c, std::vector<Rational>& out) {
  const Subfield& s = subfield(big, small);
  const size_t ds = s.basis.size();
  out.assign(ds, Rational(0));
  for (size_t j = 0; j < ds; ++j)
    for (size_t k = 0; k < ds; ++k)
      if (s.minor_inv[j][k] != 0) out[j] += s.minor_inv[j][k] * c[s.pivots[k]];
  for (size_t r = 0; r < c.size(); ++r) {
    Rational acc = 0;
    for (size_t j = 0; j < ds; ++j)
      if (out[j] != 0 && s.basis[j][r] != 0) acc += out[j] * s.basis[j][r];
    if (acc != c[r]) return false;
  }
  return true;
}

std::vector<Rational> lift(long order, const std::vector<Rational>& c, long target) {
  if (order == target) return c;
  const long step = target / order;
  std::vector<Rational> v(static_cast<size_t>(target));
  for (size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) v[static_cast<size_t>(mod(static_cast<long>(j) * step, target))] += c[j];
  return reduce_mod_phi(std::move(v), target);
}

}  // namespace

const std::vector<Integer>& cyclotomic_poly_coeffs(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  thread_local std::map<long, std::vector<Integer>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> p(static_cast<size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_poly_coeffs(d);
    const size_t dq = q.size() - 1;
    std::vector<Integer> quot(p.size() - dq);
    for (size_t top = p.size(); top-- > dq;) {
      Integer lead = p[top];
      quot[top - dq] = lead;
      if (lead == 0) continue;
      for (size_t k = 0; k <= dq; ++k) p[top - dq + k] -= lead * q[k];
    }
    p = std::move(quot);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

RootOfUnity::RootOfUnity(long order, long exponent) {
  if (order < 1) throw std::invalid_argument("root of unity order must be positive");
  long k = mod(exponent, order);
  long g = gcd_long(order, k);
  if (k == 0) g = order;
  order_ = order / g;
  exponent_ = k / g;
}

RootOfUnity RootOfUnity::pow(long e) const {
  Integer k = Integer(exponent_) * e;
  Integer r = k % order_;
  if (r < 0) r += order_;
  return RootOfUnity(order_, r.get_si());
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long n = lcm_long(order_, o.order_);
  return RootOfUnity(n, exponent_ * (n / order_) + o.exponent_ * (n / o.order_));
}

std::string RootOfUnity::to_string() const {
  if (order_ == 1) return "1";
  if (order_ == 2) return "-1";
  if (exponent_ == 1) return "E(" + std::to_string(order_) + ")";
  return "E(" + std::to_string(order_) + ")^" + std::to_string(exponent_);
}

Cyclotomic::Cyclotomic() : order_(1), c_{Rational(0)} {}
Cyclotomic::Cyclotomic(long v) : order_(1), c_{Rational(v)} {}
Cyclotomic::Cyclotomic(const Rational& r) : order_(1), c_{r} {}
Cyclotomic::Cyclotomic(long order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {
  canonicalize();
}

Cyclotomic Cyclotomic::root(long n, long e) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  return Cyclotomic(n, root_coeffs(n, e));
}

Cyclotomic Cyclotomic::from_exponents(long n, const std::map<long, Rational>& coeffs) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::vector<Rational> v(static_cast<size_t>(n));
  for (const auto& [e, c] : coeffs) v[static_cast<size_t>(mod(e, n))] += c;
  return Cyclotomic(n, reduce_mod_phi(std::move(v), n));
}

void Cyclotomic::canonicalize() {
  for (;;) {
    bool rational = true;
    for (size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) {
        rational = false;
        break;
      }
    if (rational) {
      Rational r = c_.empty() ? Rational(0) : c_[0];
      order_ = 1;
      c_.assign(1, r);
      return;
    }
    bool moved = false;
    for (long p : prime_factors(order_)) {
      std::vector<Rational> out;
      if (descend(order_, order_ / p, c_, out)) {
        order_ /= p;
        c_ = std::move(out);
        moved = true;
        break;
      }
    }
    if (!moved) return;
  }
}

bool Cyclotomic::is_zero() const { return order_ == 1 && c_[0] == 0; }

const Rational& Cyclotomic::rational() const {
  if (order_ != 1) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return c_[0];
}

bool Cyclotomic::is_integer() const { return order_ == 1 && c_[0].get_den() == 1; }

std::vector<Rational> Cyclotomic::coeffs_in(long target) const {
  if (target < 1 || target % order_ != 0)
    throw IncompatibleOrder("element of order " + std::to_string(order_) +
                            " does not embed into order " + std::to_string(target));
  return lift(order_, c_, target);
}

Cyclotomic Cyclotomic::embed(long target) const { return Cyclotomic(target, coeffs_in(target)); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ == 1 && o.order_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  long n = lcm_long(order_, o.order_);
  std::vector<Rational> a = lift(order_, c_, n);
  std::vector<Rational> b = lift(o.order_, o.c_, n);
  for (size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  *this = Cyclotomic(n, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ == 1) {
    if (o.c_[0] == 0) return *this = Cyclotomic();
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational r = c_[0];
    *this = o;
    if (r == 0) return *this = Cyclotomic();
    for (auto& x : c_) x *= r;
    return *this;
  }
  long n = lcm_long(order_, o.order_);
  std::vector<Rational> a = lift(order_, c_, n);
  std::vector<Rational> b = lift(o.order_, o.c_, n);
  std::vector<Rational> prod(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  *this = Cyclotomic(n, reduce_mod_phi(std::move(prod), n));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inv(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && c_ == o.c_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != o.c_[j]) return c_[j] < o.c_[j];
  return false;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Solve (multiplication by this) x = 1 in Q(zeta_n).
  const size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rational> col(2 * d - 1);
    for (size_t i = 0; i < d; ++i) col[i + j] = c_[i];
    col = reduce_mod_phi(std::move(col), order_);
    for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  std::vector<Rational> rhs(d);
  rhs[0] = 1;
  solve_square(m, rhs);
  return Cyclotomic(order_, std::move(rhs));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (order_ == 1) return *this;
  if (gcd_long(k, order_) != 1)
    throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<Rational> v(static_cast<size_t>(order_));
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) v[static_cast<size_t>(mod(static_cast<long>(j) * k, order_))] += c_[j];
  return Cyclotomic(order_, reduce_mod_phi(std::move(v), order_));
}

bool Cyclotomic::is_real() const { return order_ <= 2 || *this == conj(); }

int Cyclotomic::sign() const {
  if (order_ == 1) return sgn(c_[0]);
  if (!is_real()) throw std::domain_error("sign of a non-real number: " + to_string());
  // Interval evaluation of the real part with doubling precision. The value is
  // known to be nonzero, so the loop terminates.
  Rational bound = 0;
  for (const auto& x : c_) bound += abs(x);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    mpfr_t sum, term, ang, pi;
    mpfr_inits2(prec, sum, term, ang, pi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      mpfr_mul_ui(ang, pi, 2 * j, MPFR_RNDN);
      mpfr_div_si(ang, ang, order_, MPFR_RNDN);
      mpfr_cos(term, ang, MPFR_RNDN);
      mpfr_mul_q(term, term, c_[j].get_mpq_t(), MPFR_RNDN);
      mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    // Every operation above loses at most a few ulps relative to |c_j|.
    mpfr_t err;
    mpfr_init2(err, 64);
    mpfr_set_q(err, bound.get_mpq_t(), MPFR_RNDU);
    mpfr_mul_2si(err, err, -static_cast<long>(prec) + 12, MPFR_RNDU);
    int s = 0;
    mpfr_abs(term, sum, MPFR_RNDN);
    if (mpfr_cmp(term, err) > 0) s = mpfr_sgn(sum);
    mpfr_clears(sum, term, ang, pi, err, static_cast<mpfr_ptr>(nullptr));
    if (s != 0) return s > 0 ? 1 : -1;
  }
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    z += c_[j].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return rational_to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    const Rational& c = c_[j];
    if (c == 0) continue;
    std::string coef = rational_to_string(c);
    if (!first && c > 0) os << '+';
    if (j == 0) {
      os << coef;
    } else {
      if (c == 1) {
      } else if (c == -1) {
        os << '-';
      } else {
        os << coef << '*';
      }
      os << "E(" << order_ << ')';
      if (j > 1) os << '^' << j;
    }
    first = false;
  }
  return os.str();
}

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, char op) {
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

Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inv(); }
Cyclotomic cyc_embed(const Cyclotomic& a, long target_order) { return a.embed(target_order); }
std::complex<double> cyc_to_float(const Cyclotomic& a) { return a.to_complex(); }

}  // namespace cyclohecke
