// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/speceng.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <set>

namespace cyclohecke {

Specialization Specialization::from_q(const RootOfUnity& xi, long mu_order) {
  if (mu_order < 1) throw std::invalid_argument("mu_order must be positive");
  Specialization s;
  s.xi = xi;
  s.mu_order = mu_order;
  s.zeta = RootOfUnity(xi.order() * mu_order, xi.exponent());
  return s;
}

std::string Specialization::to_string() const {
  return "q=" + xi.to_string() + " (y=" + zeta.to_string() + ")";
}

RootOfUnity parse_q_spec(const std::string& text) {
  static const std::regex zeta(R"(^\s*zeta(\d+)(\^(-?\d+))?\s*$)");
  static const std::regex chevie(R"(^\s*E\((\d+)\)(\^(-?\d+))?\s*$)");
  std::smatch m;
  std::string t = text;
  if (std::regex_match(t, m, zeta) || std::regex_match(t, m, chevie)) {
    long n = std::stol(m[1].str());
    long k = m[3].matched ? std::stol(m[3].str()) : 1;
    if (n < 1) throw std::invalid_argument("root of unity order must be positive: " + text);
    return RootOfUnity(n, k);
  }
  if (t == "1") return RootOfUnity(1, 0);
  if (t == "-1") return RootOfUnity(2, 1);
  if (t == "i" || t == "I") return RootOfUnity(4, 1);
  throw std::invalid_argument("cannot parse q value '" + text +
                              "' (expected zetaN, zetaN^k, E(N)^k, 1 or -1)");
}

namespace {

// Product of the Galois conjugates of p over Q(zeta_N): rational coefficients.
LaurentPoly rational_norm(const LaurentPoly& p) {
  const long n = p.coefficient_order();
  if (n == 1) return p;
  LaurentPoly r = LaurentPoly::constant(Cyclotomic(1), p.var());
  for (long k = 1; k < n; ++k)
    if (gcd_long(k, n) == 1) r *= p.galois(k);
  return r;
}

bool vanishes_at_primitive(const LaurentPoly& rational_poly, long m) {
  // A cheap float screen first; only near-zero values get the exact test.
  double scale = 0;
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(m));
  std::complex<double> acc = 0;
  for (const auto& [e, c] : rational_poly.terms()) {
    double v = c.rational().get_d();
    scale += std::abs(v);
    acc += v * std::pow(z, static_cast<double>(e));
  }
  if (std::abs(acc) > 1e-6 * (scale + 1)) return false;
  return rational_poly.eval(RootOfUnity(m, 1)).is_zero();
}

}  // namespace

std::vector<long> critical_orders(const Dataset& ds) {
  std::set<long> out;
  for (const auto& s : ds.schur) {
    LaurentPoly p = s.shifted(-s.valuation());
    LaurentPoly r = rational_norm(p);
    const long d = r.degree();
    if (d == 0) continue;
    // phi(m) <= d holds only for m below this bound.
    const long bound = 8 * d + 30;
    for (long m = 1; m <= bound; ++m) {
      if (euler_phi(m) > d) continue;
      if (vanishes_at_primitive(r, m)) out.insert(m);
    }
  }
  return {out.begin(), out.end()};
}

CycMatrix specialize_matrix(const LpMatrix& m, const Specialization& spec) {
  return m.map([&](const LaurentPoly& p) { return p.eval(spec.xi); });
}

std::vector<CycMatrix> specialize_rep(const Representation& rep, const Specialization& spec) {
  std::vector<CycMatrix> out;
  for (const auto& m : rep.matrices) out.push_back(specialize_matrix(m, spec));
  return out;
}

SpecReport spec_report(const Dataset& ds, const Specialization& spec) {
  SpecReport r;
  r.spec = spec;
  for (const auto& s : ds.schur) {
    Cyclotomic v = s.eval(spec.xi);
    r.defect_zero.push_back(!v.is_zero());
    if (v.is_zero()) r.semisimple = false;
    r.schur_values.push_back(std::move(v));
  }
  return r;
}

std::vector<std::vector<Cyclotomic>> specialized_parameters(const Dataset& ds,
                                                            const Specialization& spec) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& ps : ds.group.parameters) {
    std::vector<Cyclotomic> vals;
    for (const auto& p : ps) {
      Cyclotomic v = p.eval(spec.xi);
      bool dup = false;
      for (const auto& w : vals) dup = dup || w == v;
      if (!dup) vals.push_back(std::move(v));
    }
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace cyclohecke
