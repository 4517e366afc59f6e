// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "test_support.hpp"

using namespace cyclohecke;
using testing_support::at_q;
using testing_support::E;
using testing_support::g12;
using testing_support::g4;

TEST_CASE("q grammar") {
  CHECK(parse_q_spec("zeta8") == RootOfUnity(8, 1));
  CHECK(parse_q_spec("zeta8^3") == RootOfUnity(8, 3));
  CHECK(parse_q_spec("E(8)^7") == RootOfUnity(8, 7));
  CHECK(parse_q_spec("E(12)") == RootOfUnity(12, 1));
  CHECK(parse_q_spec("-1") == RootOfUnity(2, 1));
  CHECK(parse_q_spec("1") == RootOfUnity(1, 0));
  CHECK(parse_q_spec("i") == RootOfUnity(4, 1));
  CHECK(parse_q_spec("zeta8^2") == RootOfUnity(4, 1));
  CHECK_THROWS_AS(parse_q_spec("zeta"), std::invalid_argument);
  CHECK_THROWS_AS(parse_q_spec("2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_q_spec("E(0)"), std::invalid_argument);
}

TEST_CASE("principal lift") {
  Specialization s = Specialization::from_q(RootOfUnity(8, 3), 2);
  CHECK(s.xi == RootOfUnity(8, 3));
  CHECK(s.zeta == RootOfUnity(16, 3));
  CHECK(s.zeta.pow(2) == s.xi);
}

TEST_CASE("critical orders") {
  CHECK(critical_orders(g12()) == std::vector<long>{1, 2, 8, 12, 24});
  CHECK(critical_orders(g4()) == std::vector<long>{1, 2, 6, 12});
}

TEST_CASE("Schur values at zeta8") {
  const Dataset& ds = g12();
  SpecReport r = spec_report(ds, at_q(ds, "zeta8"));
  std::vector<Cyclotomic> expected{0, 0, 0, 4, -288, 0, 0, 0};
  CHECK(r.schur_values == expected);
  CHECK(!r.semisimple);
  std::vector<bool> d0(8, false);
  d0[ds.index_of("phi{2,4}")] = true;
  d0[ds.index_of("phi{2,5}")] = true;
  CHECK(r.defect_zero == d0);
}

TEST_CASE("non-critical orders are semisimple") {
  for (const Dataset* ds : {&g12(), &g4()}) {
    auto crit = critical_orders(*ds);
    for (long m = 1; m <= 30; ++m) {
      bool critical = std::find(crit.begin(), crit.end(), m) != crit.end();
      for (long k = 1; k <= m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        SpecReport r = spec_report(*ds, Specialization::from_q(RootOfUnity(m, k), ds->group.mu_order));
        CHECK(r.semisimple == !critical);
      }
    }
  }
}

TEST_CASE("zeta5 is semisimple, cross-checked numerically") {
  const Dataset& ds = g12();
  SpecReport r = spec_report(ds, at_q(ds, "zeta5"));
  CHECK(r.semisimple);
  for (size_t i = 0; i < ds.size(); ++i) {
    CHECK(!r.schur_values[i].is_zero());
    auto oracle = testing_support::float_eval(ds.schur[i], 5, 1);
    CHECK(std::abs(oracle) > 1e-6);
    CHECK(std::abs(cyc_to_float(r.schur_values[i]) - oracle) < 1e-6 * (1 + std::abs(oracle)));
  }
}

TEST_CASE("defect-zero sets are Galois stable up to a dimension-preserving relabeling") {
  auto dims = [](const Dataset& ds, const std::vector<bool>& d0) {
    std::vector<int> out;
    for (size_t i = 0; i < ds.size(); ++i)
      if (d0[i]) out.push_back(ds.characters[i].dim);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const Dataset* ds : {&g12(), &g4()}) {
    for (long m : critical_orders(*ds)) {
      SpecReport base = spec_report(*ds, Specialization::from_q(RootOfUnity(m, 1), ds->group.mu_order));
      for (long k = 2; k < m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        SpecReport other = spec_report(*ds, Specialization::from_q(RootOfUnity(m, k), ds->group.mu_order));
        CHECK(dims(*ds, other.defect_zero) == dims(*ds, base.defect_zero));
      }
    }
  }
  for (const Dataset* ds : {&g4()})
    for (long m : critical_orders(*ds))
      for (long k = 2; k < m; ++k)
        if (gcd_long(k, m) == 1)
          CHECK(spec_report(*ds, Specialization::from_q(RootOfUnity(m, k), ds->group.mu_order)).defect_zero ==
                spec_report(*ds, Specialization::from_q(RootOfUnity(m, 1), ds->group.mu_order)).defect_zero);
}

TEST_CASE("G12 at order 8: conjugation by 3 exchanges phi{2,1} and phi{2,5}") {
  const Dataset& ds = g12();
  auto a = spec_report(ds, at_q(ds, "zeta8"));
  auto b = spec_report(ds, at_q(ds, "E(8)^3"));
  auto c = spec_report(ds, at_q(ds, "E(8)^7"));
  CHECK(a.defect_zero == c.defect_zero);
  CHECK(a.defect_zero[ds.index_of("phi{2,5}")]);
  CHECK(!a.defect_zero[ds.index_of("phi{2,1}")]);
  CHECK(b.defect_zero[ds.index_of("phi{2,1}")]);
  CHECK(!b.defect_zero[ds.index_of("phi{2,5}")]);
}

TEST_CASE("specialize_rep") {
  const Dataset& ds = g12();
  auto sp = at_q(ds, "zeta8");
  for (const auto& m : specialize_rep(ds.representations[ds.index_of("phi{1,12}")], sp)) CHECK(m(0, 0) == E(4));
  for (const char* q : {"zeta5", "zeta8", "-1", "E(24)^5"})
    for (const auto& m : specialize_rep(ds.representations[ds.index_of("phi{1,0}")], at_q(ds, q)))
      CHECK(m(0, 0) == Cyclotomic(1));
  const auto& rep = ds.representations[ds.index_of("phi{4,3}")];
  auto prod = specialize_matrix(eval_word(ds.group, rep, {"s", "t", "u"}), sp);
  auto mats = specialize_rep(rep, sp);
  CHECK(prod == mats[0] * mats[1] * mats[2]);
}
