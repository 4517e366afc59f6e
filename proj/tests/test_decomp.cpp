// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "test_support.hpp"

using namespace cyclohecke;
using testing_support::at_q;
using testing_support::E;
using testing_support::g12;
using testing_support::g4;

namespace {

CycMatrix mat(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
  CycMatrix m(rows.size(), rows.begin()->size());
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<std::vector<CycMatrix>> specialize_everything(const Dataset& ds, const Specialization& sp) {
  std::vector<std::vector<CycMatrix>> out;
  for (const auto& rep : ds.representations) out.push_back(specialize_rep(rep, sp));
  return out;
}

// Every line found by brute force over all eigenvalue tuples, as a yes/no.
bool brute_force_has_line(const std::vector<CycMatrix>& mats, const std::vector<std::vector<Cyclotomic>>& allowed) {
  const size_t n = mats[0].rows();
  std::vector<size_t> idx(mats.size(), 0);
  while (true) {
    CycMatrix stacked(n * mats.size(), n);
    for (size_t g = 0; g < mats.size(); ++g)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) stacked(g * n + i, j) = mats[g](i, j) - (i == j ? allowed[g][idx[g]] : Cyclotomic());
    if (rank(stacked) < n) return true;
    size_t g = 0;
    while (g < mats.size() && ++idx[g] == allowed[g].size()) idx[g++] = 0;
    if (g == mats.size()) return false;
  }
}

std::vector<std::pair<const Dataset*, std::string>> all_shipped_cases() {
  std::vector<std::pair<const Dataset*, std::string>> out;
  for (const Dataset* ds : {&g12(), &g4()})
    for (long m : critical_orders(*ds))
      for (long k = 1; k <= std::max(1L, m); ++k)
        if (gcd_long(k, m) == 1 && (k == 1 || k == m - 1))
          out.emplace_back(ds, m == 1 ? "1" : "E(" + std::to_string(m) + ")^" + std::to_string(k));
  return out;
}

// True if b equals a after some permutation of rows that keeps dimensions and
// some permutation of columns.
bool equal_up_to_dim_permutation(const Dataset& ds, const DecompositionMatrix& a, const DecompositionMatrix& b) {
  if (a.columns.size() != b.columns.size() || a.rows.size() != b.rows.size()) return false;
  std::vector<size_t> perm(a.columns.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto tagged = [&](const DecompositionMatrix& dm, const std::vector<size_t>& p) {
    std::vector<std::pair<int, std::vector<long>>> rows;
    for (size_t r = 0; r < dm.rows.size(); ++r) {
      std::vector<long> v;
      for (size_t c : p) v.push_back(dm.entries[r][c]);
      rows.emplace_back(ds.characters[dm.rows[r]].dim, v);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  const auto target = tagged(a, perm);
  do {
    if (tagged(b, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("eigenspace examples") {
  CHECK(eigenspace(mat({{E(4)}}), E(4)).size() == 1);
  CHECK(eigenspace(mat({{1, 0}, {0, 1}}), Cyclotomic(1)).size() == 2);
  CHECK(eigenspace(mat({{1, 0}, {0, E(4)}}), Cyclotomic(-1)).empty());
  auto v = eigenspace(mat({{2, 1}, {0, 3}}), Cyclotomic(3));
  REQUIRE(v.size() == 1);
  CHECK(v[0][0] == v[0][1]);
}

TEST_CASE("common invariant line examples") {
  const Dataset& ds = g12();
  auto sp = at_q(ds, "zeta8");
  auto mats = specialize_rep(ds.representations[ds.index_of("phi{2,1}")], sp);
  std::vector<std::vector<Cyclotomic>> allowed(3, {Cyclotomic(1), E(4)});
  CHECK(specialized_parameters(ds, sp) == allowed);
  CHECK(common_invariant_line(mats, allowed).empty());
  CHECK(common_invariant_line({mat({{1}}), mat({{1}}), mat({{1}})}, {{1}, {1}, {1}}).size() == 1);

  CycMatrix a = mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CycMatrix b = mat({{E(3), 0, 0}, {0, E(3, 2), 0}, {0, 0, 1}});
  auto lines = common_invariant_line({a, b}, {{1, -1}, {1, E(3), E(3, 2)}});
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].vector[0].is_zero());
  CHECK(lines[0].vector[1].is_zero());
  CHECK(!lines[0].vector[2].is_zero());
  CHECK(lines[0].eigenvalues == CycVector{1, 1});
}

TEST_CASE("common invariant line agrees with brute force") {
  int checked = 0;
  for (const auto& [ds, q] : all_shipped_cases()) {
    auto sp = at_q(*ds, q);
    auto allowed = specialized_parameters(*ds, sp);
    for (size_t i = 0; i < ds->size(); ++i) {
      if (ds->characters[i].dim > 3) continue;
      auto mats = specialize_rep(ds->representations[i], sp);
      auto lines = common_invariant_line(mats, allowed);
      CHECK(lines.empty() == !brute_force_has_line(mats, allowed));
      for (const auto& l : lines)
        for (size_t g = 0; g < mats.size(); ++g) {
          CHECK(std::find(allowed[g].begin(), allowed[g].end(), l.eigenvalues[g]) != allowed[g].end());
          for (size_t r = 0; r < mats[g].rows(); ++r) {
            Cyclotomic s;
            for (size_t c = 0; c < mats[g].cols(); ++c) s += mats[g](r, c) * l.vector[c];
            CHECK(s == l.eigenvalues[g] * l.vector[r]);
          }
        }
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("nnint_decompose examples") {
  const Dataset& ds = g12();
  auto sp = at_q(ds, "zeta8");
  auto reps = specialize_everything(ds, sp);
  auto vecs = character_vectors(reps, word_basis(ds).words);
  auto v = [&](const char* l) { return vecs[ds.index_of(l)]; };
  std::vector<CycVector> basis{v("phi{1,0}"), v("phi{2,1}"), v("phi{1,12}"), v("phi{2,4}"), v("phi{2,5}")};
  auto r32 = nnint_decompose(v("phi{3,2}"), basis);
  REQUIRE(r32.ok());
  CHECK(r32.coeffs == std::vector<Integer>{1, 1, 0, 0, 0});
  auto r36 = nnint_decompose(v("phi{3,6}"), basis);
  REQUIRE(r36.ok());
  CHECK(r36.coeffs == std::vector<Integer>{0, 1, 1, 0, 0});
  auto unit = nnint_decompose(v("phi{2,4}"), basis);
  REQUIRE(unit.ok());
  CHECK(unit.coeffs == std::vector<Integer>{0, 0, 0, 1, 0});
  auto r43 = nnint_decompose(v("phi{4,3}"), basis);
  REQUIRE(r43.ok());
  CHECK(r43.coeffs == std::vector<Integer>{1, 1, 1, 0, 0});
}

TEST_CASE("nnint_decompose failure modes") {
  CycVector a{1, 0, 0}, b{0, 1, 0};
  CHECK(nnint_decompose({1, 1, 0}, {a, b}).ok());
  CHECK(nnint_decompose({1, 1, 0}, {a, b, CycVector{1, 1, 0}}).status == NNStatus::dependent_basis);
  CHECK(nnint_decompose({0, 0, 1}, {a, b}).status == NNStatus::no_field_solution);
  CHECK(nnint_decompose({Cyclotomic(Rational(1, 2)), 0, 0}, {a, b}).status == NNStatus::non_integer);
  CHECK(nnint_decompose({E(4), 0, 0}, {a, b}).status == NNStatus::non_integer);
  CHECK(nnint_decompose({-1, 2, 0}, {a, b}).status == NNStatus::negative);
  CHECK(std::string(to_string(NNStatus::negative)) != std::string(to_string(NNStatus::non_integer)));
}

TEST_CASE("word basis") {
  const Dataset& ds = g12();
  WordBasis wb = word_basis(ds);
  CHECK(wb.length <= 6);
  CHECK(generic_character_rank(ds, wb.words) == ds.size());
  CHECK(wb.words == words_up_to(3, wb.length));
  size_t prev = 0;
  for (int L = 0; L <= wb.length; ++L) {
    size_t r = generic_character_rank(ds, words_up_to(3, L));
    CHECK(r >= prev);
    prev = r;
  }
  if (wb.length > 0) CHECK(generic_character_rank(ds, words_up_to(3, wb.length - 1)) < ds.size());
  CHECK(words_up_to(2, 2).size() == 7);
  CHECK(generic_character_rank(g4(), word_basis(g4()).words) == g4().size());
}

TEST_CASE("duplicated representation defeats the word basis") {
  Dataset ds = g12();
  ds.characters.push_back({"phi{2,1}'", 2, 1});
  ds.representations.push_back(ds.representations[ds.index_of("phi{2,1}")]);
  ds.representations.back().label = "phi{2,1}'";
  ds.schur.push_back(ds.schur[ds.index_of("phi{2,1}")]);
  CHECK_THROWS_AS(word_basis(ds, 7), WordBasisFailure);
}

TEST_CASE("G12 at zeta8 reproduces the known matrix") {
  const Dataset& ds = g12();
  auto dm = decomposition_matrix(ds, at_q(ds, "zeta8"));
  REQUIRE(dm.determined);
  std::vector<std::string> cols;
  for (size_t c : dm.columns) cols.push_back(ds.label(c));
  CHECK(cols == std::vector<std::string>{"phi{1,0}", "phi{2,1}", "phi{1,12}", "phi{2,4}", "phi{2,5}"});
  auto row = [&](const char* l) { return dm.entries[dm.row_of(ds.index_of(l))]; };
  CHECK(row("phi{1,0}") == std::vector<long>{1, 0, 0, 0, 0});
  CHECK(row("phi{3,2}") == std::vector<long>{1, 1, 0, 0, 0});
  CHECK(row("phi{4,3}") == std::vector<long>{1, 1, 1, 0, 0});
  CHECK(row("phi{2,1}") == std::vector<long>{0, 1, 0, 0, 0});
  CHECK(row("phi{3,6}") == std::vector<long>{0, 1, 1, 0, 0});
  CHECK(row("phi{1,12}") == std::vector<long>{0, 0, 1, 0, 0});
  CHECK(row("phi{2,4}") == std::vector<long>{0, 0, 0, 1, 0});
  CHECK(row("phi{2,5}") == std::vector<long>{0, 0, 0, 0, 1});
  const auto& c21 = dm.certificates[dm.row_of(ds.index_of("phi{2,1}"))];
  CHECK(c21.verdict == Verdict::irreducible);
  CHECK(c21.reason == Reason::dim_two_no_invariant_line);
  CHECK(dm.certificates[dm.row_of(ds.index_of("phi{2,4}"))].reason == Reason::defect_zero);
  CHECK(dm.certificates[dm.row_of(ds.index_of("phi{1,12}"))].reason == Reason::dim_one);
  CHECK(dm.column_of(ds.index_of("phi{3,2}")) == std::nullopt);
}

TEST_CASE("G4 at zeta6 has one shape-(v) block") {
  const Dataset& ds = g4();
  auto dm = decomposition_matrix(ds, at_q(ds, "zeta6"));
  REQUIRE(dm.determined);
  std::vector<std::string> lifts;
  for (size_t c : dm.columns)
    if (!dm.defect_zero[dm.row_of(c)]) lifts.push_back(ds.label(c));
  std::sort(lifts.begin(), lifts.end());
  CHECK(lifts == std::vector<std::string>{"phi{1,0}", "phi{1,4}", "phi{1,8}"});
}

TEST_CASE("invariants on every produced matrix") {
  for (const auto& [ds, q] : all_shipped_cases()) {
    CAPTURE(ds->group.name);
    CAPTURE(q);
    auto sp = at_q(*ds, q);
    auto dm = decomposition_matrix(*ds, sp);
    REQUIRE(dm.determined);
    REQUIRE(dm.rows.size() == ds->size());
    auto reps = specialize_everything(*ds, sp);
    auto longer = words_up_to(ds->group.generators.size(), dm.word_basis.length + 1);
    auto vecs = character_vectors(reps, longer);
    for (size_t r = 0; r < dm.rows.size(); ++r) {
      const size_t label = dm.rows[r];
      long dim = 0;
      for (size_t c = 0; c < dm.columns.size(); ++c) {
        CHECK(dm.entries[r][c] >= 0);
        dim += dm.entries[r][c] * ds->characters[dm.columns[c]].dim;
      }
      CHECK(dim == ds->characters[label].dim);
      for (size_t w = 0; w < longer.size(); ++w) {
        Cyclotomic s;
        for (size_t c = 0; c < dm.columns.size(); ++c)
          if (dm.entries[r][c] != 0) s += Cyclotomic(dm.entries[r][c]) * vecs[dm.columns[c]][w];
        REQUIRE(s == vecs[label][w]);
      }
      const auto& cert = dm.certificates[r];
      if (cert.verdict == Verdict::irreducible) {
        CHECK(std::accumulate(dm.entries[r].begin(), dm.entries[r].end(), 0L) == 1);
      } else {
        REQUIRE(cert.verdict == Verdict::reducible);
        CHECK(reverify_certificate(*ds, dm, r));
      }
    }
    for (size_t c = 0; c < dm.columns.size(); ++c) {
      const auto& unit = dm.entries[dm.row_of(dm.columns[c])];
      for (size_t k = 0; k < unit.size(); ++k) CHECK(unit[k] == (k == c ? 1 : 0));
    }
  }
}

TEST_CASE("tampered certificates do not re-verify") {
  const Dataset& ds = g12();
  auto dm = decomposition_matrix(ds, at_q(ds, "zeta8"));
  size_t r = dm.row_of(ds.index_of("phi{3,2}"));
  REQUIRE(reverify_certificate(ds, dm, r));
  auto bad = dm;
  bad.certificates[r].row = {1, 0, 1, 0, 0};
  bad.certificates[r].line.reset();
  CHECK(!reverify_certificate(ds, bad, r));
  CHECK(!reverify_certificate(ds, dm, dm.row_of(ds.index_of("phi{1,0}"))));
}

TEST_CASE("semisimple points give the identity") {
  for (const Dataset* ds : {&g12(), &g4()}) {
    for (const char* q : {"zeta5", "zeta7", "E(9)^2", "zeta10"}) {
      auto dm = decomposition_matrix(*ds, at_q(*ds, q));
      REQUIRE(dm.columns.size() == ds->size());
      for (size_t r = 0; r < dm.rows.size(); ++r) {
        CHECK(dm.rows[r] == r);
        CHECK(dm.columns[r] == r);
        for (size_t c = 0; c < dm.columns.size(); ++c) CHECK(dm.entries[r][c] == (r == c ? 1 : 0));
      }
    }
  }
}

TEST_CASE("matrices depend only on the order of q") {
  for (const Dataset* ds : {&g12(), &g4()}) {
    for (long m : critical_orders(*ds)) {
      auto base = decomposition_matrix(*ds, Specialization::from_q(RootOfUnity(m, 1), ds->group.mu_order));
      for (long k = 2; k < m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        CAPTURE(ds->group.name);
        CAPTURE(m);
        CAPTURE(k);
        auto other = decomposition_matrix(*ds, Specialization::from_q(RootOfUnity(m, k), ds->group.mu_order));
        CHECK(equal_up_to_dim_permutation(*ds, base, other));
      }
    }
  }
}

TEST_CASE("complex conjugate q keeps (dim, b) labels") {
  const Dataset& ds = g12();
  auto a = decomposition_matrix(ds, at_q(ds, "zeta8"));
  auto b = decomposition_matrix(ds, at_q(ds, "E(8)^7"));
  CHECK(a.rows == b.rows);
  CHECK(a.columns == b.columns);
  CHECK(a.entries == b.entries);
}
