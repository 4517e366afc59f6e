// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "test_support.hpp"

using namespace cyclohecke;
using testing_support::E;

TEST_CASE("arithmetic examples") {
  CHECK(cyc_arith(E(3), E(3, 2), '+') == Cyclotomic(-1));
  CHECK(cyc_arith(E(8), E(8), '*') == E(4));
  CHECK(E(8) * E(8) == E(4));
  CHECK((E(8) * E(8)).order() == 4);
  CHECK(E(4) * E(4) == Cyclotomic(-1));
  CHECK((E(4) * E(4)).is_rational());
  CHECK(cyc_arith(E(5), E(5), '-').is_zero());
}

TEST_CASE("inverse examples") {
  CHECK(cyc_inv(E(8, 3)) == E(8, 5));
  CHECK(cyc_inv(Cyclotomic(2)) == Cyclotomic(Rational(1, 2)));
  Cyclotomic a = Cyclotomic(1) + E(4);
  Cyclotomic expected = (Cyclotomic(1) - E(4)) * Cyclotomic(Rational(1, 2));
  CHECK(cyc_inv(a) == expected);
  CHECK(a * cyc_inv(a) == Cyclotomic(1));
  std::complex<double> oracle = 1.0 / std::complex<double>(1.0, 1.0);
  auto got = cyc_to_float(cyc_inv(a));
  CHECK(got.real() == doctest::Approx(oracle.real()));
  CHECK(got.imag() == doctest::Approx(oracle.imag()));
  CHECK_THROWS_AS(cyc_inv(Cyclotomic()), DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), DivisionByZero);
}

TEST_CASE("embedding examples") {
  CHECK(cyc_embed(E(4), 8) == E(8, 2));
  CHECK(cyc_embed(E(4), 8).coeffs_in(8) == E(8, 2).coeffs_in(8));
  CHECK(cyc_embed(Cyclotomic(1), 12) == Cyclotomic(1));
  CHECK(cyc_embed(E(6), 12) == E(12, 2));
  CHECK_THROWS_AS(cyc_embed(E(8), 12), IncompatibleOrder);
  CHECK_THROWS_AS(cyc_embed(E(3), 4), IncompatibleOrder);
}

TEST_CASE("float examples") {
  auto z4 = cyc_to_float(E(4));
  CHECK(z4.real() == doctest::Approx(0.0));
  CHECK(z4.imag() == doctest::Approx(1.0));
  auto m1 = cyc_to_float(Cyclotomic(-1));
  CHECK(m1.real() == doctest::Approx(-1.0));
  CHECK(m1.imag() == doctest::Approx(0.0));
  auto z3 = cyc_to_float(E(3));
  CHECK(z3.real() == doctest::Approx(-0.5));
  CHECK(z3.imag() == doctest::Approx(0.8660254037844386));
}

TEST_CASE("canonical forms descend to the smallest field") {
  CHECK(E(6).order() == 3);
  CHECK(E(6) == -E(3, 2));
  CHECK((E(8) + E(8, 7)).order() == 8);
  CHECK((E(8) + E(8, 7)) * (E(8) + E(8, 7)) == Cyclotomic(2));
  CHECK((E(12) + E(12, 11)) * (E(12) + E(12, 11)) == Cyclotomic(3));
  CHECK((E(5) + E(5, 4)).is_real());
  CHECK(!E(5).is_real());
  CHECK(E(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root(10, 5) == Cyclotomic(-1));
}

TEST_CASE("roots of unity and cyclotomic polynomials") {
  for (long n = 1; n <= 48; ++n) {
    CHECK(E(n).pow(n) == Cyclotomic(1));
    const auto& phi = cyclotomic_poly_coeffs(n);
    CHECK(static_cast<long>(phi.size()) == euler_phi(n) + 1);
    Cyclotomic v;
    for (size_t e = 0; e < phi.size(); ++e) v += Cyclotomic(Rational(phi[e])) * E(n).pow(static_cast<long>(e));
    CHECK(v.is_zero());
    if (n >= 2) {
      Cyclotomic s;
      for (long k = 0; k < n; ++k) s += E(n, k);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("exact sign of real numbers") {
  CHECK((E(8) + E(8, 7)).sign() == 1);
  CHECK((E(8, 3) + E(8, 5)).sign() == -1);
  CHECK((E(5) + E(5, 4)).sign() == 1);
  CHECK((E(5, 2) + E(5, 3)).sign() == -1);
  CHECK(Cyclotomic().sign() == 0);
  Cyclotomic tiny = E(8) + E(8, 7) - Cyclotomic(Rational(1414213562, 1000000000));
  CHECK(tiny.sign() == 1);
  CHECK_THROWS(E(4).sign());
}

TEST_CASE("galois action") {
  CHECK(E(8).galois(3) == E(8, 3));
  CHECK(E(4).conj() == E(4, 3));
  Cyclotomic r2 = E(8) + E(8, 7);
  CHECK(r2.galois(3) == -r2);
  CHECK(r2.galois(7) == r2);
}

TEST_CASE("text form") {
  CHECK(Cyclotomic(Rational(-3, 2)).to_string() == "-3/2");
  CHECK(E(4).to_string() == "E(4)");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(rational_to_string(Rational(5)) == "5");
}

TEST_CASE("serialized form round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    long n = 1 + static_cast<long>(rng() % 48);
    Cyclotomic a = testing_support::random_cyc(rng, n);
    CHECK(cyclotomic_from_json(cyclotomic_to_json(a), "test") == a);
  }
  CHECK(cyclotomic_from_json(Json("3/4"), "test") == Cyclotomic(Rational(3, 4)));
  Json j = {{"order", 4}, {"coeffs", {{"1", "2"}}}};
  CHECK(cyclotomic_from_json(j, "test") == Cyclotomic(2) * E(4));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20260101);
  int cases = 0;
  for (; cases < 10000; ++cases) {
    long n = 1 + static_cast<long>(rng() % 48);
    Cyclotomic a = testing_support::random_cyc(rng, n);
    Cyclotomic b = testing_support::random_cyc(rng, n);
    Cyclotomic c = testing_support::random_cyc(rng, n, 2);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Cyclotomic());
    if (!a.is_zero()) REQUIRE(a * a.inv() == Cyclotomic(1));
    Cyclotomic ab = a * b;
    long target = ab.order() * (1 + static_cast<long>(rng() % 4));
    REQUIRE(cyc_embed(ab, target) == ab);
  }
  CHECK(cases == 10000);
}

TEST_CASE("float values agree with exact values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    long n = 1 + static_cast<long>(rng() % 48);
    std::map<long, Rational> m;
    for (int t = 0; t < 4; ++t) m[static_cast<long>(rng() % static_cast<unsigned long>(n))] += Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
    for (auto& [e, r] : m) r.canonicalize();
    auto exact = cyc_to_float(Cyclotomic::from_exponents(n, m));
    auto oracle = testing_support::float_of(n, m);
    CHECK(std::abs(exact - oracle) < 1e-9);
  }
}
