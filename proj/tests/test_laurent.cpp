// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "test_support.hpp"

using namespace cyclohecke;
using testing_support::E;

namespace {

LaurentPoly Y(long e = 1, Cyclotomic c = Cyclotomic(1)) { return LaurentPoly::monomial(c, e, Var::y); }
LaurentPoly Q(long e = 1, Cyclotomic c = Cyclotomic(1)) { return LaurentPoly::monomial(c, e, Var::q); }
LaurentPoly one_y() { return LaurentPoly::constant(Cyclotomic(1), Var::y); }
LaurentPoly one_q() { return LaurentPoly::constant(Cyclotomic(1), Var::q); }

// Coefficients in Q(zeta_order), exponents in [-6, 6].
LaurentPoly random_lp(std::mt19937_64& rng, Var v, long order) {
  LaurentPoly::Terms t;
  int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) {
    long e = static_cast<long>(rng() % 13) - 6;
    t[e] += testing_support::random_cyc(rng, order, 2);
  }
  return LaurentPoly(v, t);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(lp_arith(Y() - one_y(), Y() + one_y(), '*') == Y(2) - one_y());
  CHECK(lp_arith(Q(2) + one_q(), -Q(2), '+') == one_q());
  CHECK(Y(-1) * Y() == one_y());
  CHECK_THROWS_AS(Y() + Q(), VariableMismatch);
  CHECK_THROWS_AS(lp_arith(Y(), Q(), '*'), VariableMismatch);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == Y() - one_y());
  CHECK(cyclotomic_poly(4) == Y(2) + one_y());
  CHECK(cyclotomic_poly(8) == Y(4) + one_y());
  for (long d = 1; d <= 30; ++d) {
    LaurentPoly phi = cyclotomic_poly(d);
    CHECK(phi.degree() == euler_phi(d));
    CHECK(phi.valuation() == 0);
    CHECK(lp_eval(phi, RootOfUnity(d, 1)).is_zero());
    for (long m = 1; m <= 30; ++m)
      if (m != d) CHECK(!lp_eval(phi, RootOfUnity(m, 1)).is_zero());
  }
}

TEST_CASE("evaluation examples") {
  const Dataset& ds = testing_support::g12();
  RootOfUnity z8(8, 1);
  CHECK(lp_eval(ds.schur[ds.index_of("phi{2,4}")], z8) == Cyclotomic(4));
  CHECK(lp_eval(ds.schur[ds.index_of("phi{2,5}")], z8) == Cyclotomic(-288));
  CHECK(lp_eval(Y() - one_y(), RootOfUnity(1, 0)).is_zero());
  CHECK(Q(3).eval(E(4)) == -E(4));
  CHECK(Q(-1).eval(RootOfUnity(8, 1)) == E(8, 7));
}

TEST_CASE("valuation examples") {
  CHECK(lp_valuation(Y(-3) * (Y(2) + one_y())) == -3);
  CHECK(lp_valuation(Q(5)) == 5);
  CHECK(lp_valuation(LaurentPoly::constant(Cyclotomic(7), Var::y)) == 0);
  CHECK_THROWS_AS(lp_valuation(LaurentPoly(Var::y)), ZeroPolynomial);
}

TEST_CASE("substitute_power examples") {
  CHECK(substitute_power(Q(2) + one_q(), 2) == Y(4) + one_y());
  CHECK(substitute_power(Q(-1), 6) == Y(-6));
  CHECK(substitute_power(one_q(), 3) == one_y());
  CHECK(substitute_power(one_q(), 3).var() == Var::y);
}

TEST_CASE("exact division examples") {
  CHECK(lp_exact_div(Y(2) - one_y(), Y() - one_y()) == Y() + one_y());
  LaurentPoly a = Y(3, E(3)) - Y(-1, Cyclotomic(2));
  CHECK(lp_exact_div(a, a) == one_y());
  try {
    lp_exact_div(Y(2) + one_y(), Y() - one_y());
    FAIL("expected InexactDivision");
  } catch (const InexactDivision& e) {
    CHECK(!e.remainder().empty());
  }
  const Dataset& ds = testing_support::g12();
  LaurentPoly P = lcm_P(ds);
  LaurentPoly d21 = lp_exact_div(P, ds.schur[ds.index_of("phi{2,1}")]);
  Cyclotomic v = d21.eval(RootOfUnity(8, 1));
  Cyclotomic ref = P.exact_div(ds.schur[0]).eval(RootOfUnity(8, 1));
  CHECK(v / ref == Cyclotomic(4));
}

TEST_CASE("vanishing order examples") {
  RootOfUnity z8(8, 1);
  LaurentPoly lin = Y() - LaurentPoly::constant(E(8), Var::y);
  CHECK(vanishing_order(lin * lin * (Y() + one_y()), z8) == 2);
  CHECK(vanishing_order(Y(4) + one_y(), z8) == 1);
  CHECK(vanishing_order(Y() - one_y(), RootOfUnity(3, 1)) == 0);
  CHECK_THROWS_AS(vanishing_order(LaurentPoly(Var::y), z8), ZeroPolynomial);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 10000; ++i) {
    long order = 1 + static_cast<long>(rng() % 24);
    LaurentPoly a = random_lp(rng, Var::y, order), b = random_lp(rng, Var::y, order), c = random_lp(rng, Var::y, order);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    if (i % 4 == 0) REQUIRE((a * b) * c == a * (b * c));
    if (i % 10 == 0 && !b.is_zero()) REQUIRE(lp_exact_div(a * b, b) == a);
  }
}

TEST_CASE("vanishing order agrees with repeated division") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    long n = 1 + static_cast<long>(rng() % 12);
    long k = static_cast<long>(rng() % static_cast<unsigned long>(n));
    RootOfUnity z(n, k);
    LaurentPoly lin = Y() - LaurentPoly::constant(Cyclotomic::root(z), Var::y);
    LaurentPoly p = random_lp(rng, Var::y, n);
    if (p.is_zero()) continue;
    int mult = static_cast<int>(rng() % 3);
    for (int j = 0; j < mult; ++j) p *= lin;
    long order = vanishing_order(p, z);
    CHECK(order >= mult);
    LaurentPoly r = p;
    for (long j = 0; j < order; ++j) r = lp_exact_div(r, lin);
    CHECK_THROWS_AS(lp_exact_div(r, lin), InexactDivision);
    CHECK(p.strip_root(z, order) == r);
  }
}

TEST_CASE("substitute_power commutes with evaluation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    long n = 1 + static_cast<long>(rng() % 24);
    LaurentPoly p = random_lp(rng, Var::q, n);
    long k = 1 + static_cast<long>(rng() % 6);
    long e = static_cast<long>(rng() % static_cast<unsigned long>(n));
    RootOfUnity z(n, e);
    CHECK(substitute_power(p, k).eval(z) == p.eval(z.pow(k)));
    auto oracle = testing_support::float_eval(p, z.order(), z.exponent());
    CHECK(std::abs(cyc_to_float(p.eval(z)) - oracle) < 1e-8);
  }
}

TEST_CASE("gcd and lcm") {
  LaurentPoly a = (Y() - one_y()) * (Y() + one_y());
  LaurentPoly b = (Y() - one_y()) * (Y(2) + one_y());
  CHECK(poly_gcd(a, b) == Y() - one_y());
  CHECK(poly_lcm(a, b) == (Y() - one_y()) * (Y() + one_y()) * (Y(2) + one_y()));
  CHECK(poly_gcd(Y(-3) * a, b) == Y() - one_y());
}

TEST_CASE("serialized form") {
  Json factored = Json::parse(R"({"var":"q","unit":"2","monomial":-1,"factors":[[{"var":"q","terms":{"0":"-1","1":"1"}},2]]})");
  LaurentPoly p = laurent_from_json(factored, "test");
  LaurentPoly lin = Q() - one_q();
  CHECK(p == Q(-1, Cyclotomic(2)) * lin * lin);
  CHECK(laurent_from_json(laurent_to_json(p), "test") == p);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"var":"x","terms":{}})"), "test"), SchemaError);
}
