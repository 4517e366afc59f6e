// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cyclohecke/decomp.hpp"
#include "test_support.hpp"

using namespace cyclohecke;
using testing_support::E;
using testing_support::g12;
using testing_support::g4;

namespace {

Json raw(const std::string& file) {
  std::ifstream in(testing_support::data_path(file));
  return Json::parse(in);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto p = std::filesystem::temp_directory_path() / ("cyclohecke_test_" + name);
  std::ofstream(p) << contents;
  return p.string();
}

}  // namespace

TEST_CASE("load the shipped datasets") {
  const Dataset& ds = g12();
  REQUIRE(ds.size() == 8);
  std::vector<std::string> labels;
  for (const auto& c : ds.characters) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"phi{1,0}", "phi{1,12}", "phi{2,1}", "phi{2,4}", "phi{2,5}", "phi{3,2}",
                                           "phi{3,6}", "phi{4,3}"});
  for (size_t i = 0; i < ds.size(); ++i) CHECK(ds.representations[i].dim() == ds.characters[i].dim);
  CHECK(ds.group.mu_order == 2);
  CHECK(ds.group.generators.size() == 3);
  CHECK(g4().size() == 7);
  CHECK_THROWS_AS(ds.index_of("phi{9,9}"), LabelMismatch);
}

TEST_CASE("load errors") {
  SUBCASE("missing schur entry") {
    Json j = raw("G12.json");
    j["schur"].erase("phi{3,6}");
    CHECK_THROWS_AS(parse_dataset(j), LabelMismatch);
  }
  SUBCASE("empty file") {
    CHECK_THROWS_AS(load_dataset(temp_file("empty.json", "")), ParseError);
  }
  SUBCASE("malformed json") {
    CHECK_THROWS_AS(load_dataset(temp_file("bad.json", "{\"group\": [")), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS(load_dataset("/nonexistent/cyclohecke.json"));
  }
  SUBCASE("wrong matrix size") {
    Json j = raw("G12.json");
    j["representations"]["phi{2,1}"][0].erase(0);
    CHECK_THROWS(parse_dataset(j));
  }
  SUBCASE("unknown symbol in a relation") {
    Json j = raw("G12.json");
    j["group"]["braid_relations"][0][0][0] = "x";
    CHECK_THROWS(parse_dataset(j));
  }
}

TEST_CASE("dataset JSON round trip") {
  Dataset again = parse_dataset(dataset_to_json(g12()));
  REQUIRE(again.size() == g12().size());
  for (size_t i = 0; i < again.size(); ++i) {
    CHECK(again.schur[i] == g12().schur[i]);
    for (size_t g = 0; g < again.representations[i].matrices.size(); ++g)
      CHECK(again.representations[i].matrices[g] == g12().representations[i].matrices[g]);
  }
}

TEST_CASE("eval_word") {
  const Dataset& ds = g12();
  const auto& r32 = ds.representations[ds.index_of("phi{3,2}")];
  LpMatrix id = eval_word(r32, Word{});
  CHECK(id == LpMatrix::identity(3, LaurentPoly::constant(Cyclotomic(1)), LaurentPoly()));
  const auto& r112 = ds.representations[ds.index_of("phi{1,12}")];
  LpMatrix s = eval_word(ds.group, r112, {"s"});
  REQUIRE(s.rows() == 1);
  CHECK(s(0, 0).eval(RootOfUnity(8, 1)) == E(4));
  CHECK_THROWS_AS(eval_word(ds.group, r112, {"x"}), UnknownSymbol);
  for (const auto& rep : ds.representations) {
    auto a = eval_word(ds.group, rep, {"s", "t", "u", "s"});
    CHECK(a == eval_word(ds.group, rep, {"t", "u", "s", "t"}));
    CHECK(a == eval_word(ds.group, rep, {"u", "s", "t", "u"}));
  }
  for (const auto& rep : g4().representations)
    CHECK(eval_word(g4().group, rep, {"s", "t", "s"}) == eval_word(g4().group, rep, {"t", "s", "t"}));
}

TEST_CASE("char_value") {
  const Dataset& ds = g12();
  for (size_t i = 0; i < ds.size(); ++i)
    CHECK(char_value(ds.representations[i], Word{}) ==
          LaurentPoly::constant(Cyclotomic(ds.characters[i].dim)));
  Word s = parse_word(ds.group, {"s"});
  CHECK(char_value(ds.representations[ds.index_of("phi{1,0}")], s) == LaurentPoly::constant(Cyclotomic(1)));
  CHECK(char_value(ds.representations[ds.index_of("phi{1,12}")], s) == LaurentPoly::monomial(Cyclotomic(1), 2));
  CHECK(word_to_string(ds.group, parse_word(ds.group, {"s", "t", "u"})) == "stu");
}

TEST_CASE("validator passes on shipped data") {
  for (const Dataset* ds : {&g12(), &g4()}) {
    auto rep = validate_dataset(*ds);
    CHECK(rep.passed());
    for (const char* check : {"a", "b", "c", "d"})
      CHECK(std::any_of(rep.entries.begin(), rep.entries.end(), [&](const ValidationEntry& e) { return e.check == check; }));
  }
}

TEST_CASE("validator catches corruption") {
  SUBCASE("perturbed matrix entry") {
    Dataset ds = g12();
    auto& m = ds.representations[ds.index_of("phi{2,1}")].matrices[0];
    m(0, 0) += LaurentPoly::constant(Cyclotomic(1));
    auto rep = validate_dataset(ds);
    REQUIRE(!rep.passed());
    bool ab = false;
    for (const auto& e : rep.failures()) ab = ab || e.check == "a" || e.check == "b";
    CHECK(ab);
  }
  SUBCASE("scaled Schur element") {
    Dataset ds = g12();
    ds.schur[3] *= Cyclotomic(2);
    auto rep = validate_dataset(ds);
    REQUIRE(!rep.passed());
    for (const auto& e : rep.failures()) CHECK(e.check == "d");
  }
}

TEST_CASE("deformation relations hold after specialization") {
  for (const Dataset* ds : {&g12(), &g4()}) {
    for (long m : {1L, 2L, 5L, 8L, 12L}) {
      Specialization sp = Specialization::from_q(RootOfUnity(m, 1), ds->group.mu_order);
      auto distinct = specialized_parameters(*ds, sp);
      for (const auto& rep : ds->representations) {
        auto mats = specialize_rep(rep, sp);
        for (size_t g = 0; g < mats.size(); ++g) {
          CycMatrix prod = CycMatrix::identity(mats[g].rows(), Cyclotomic(1), Cyclotomic());
          for (const auto& p : ds->group.parameters[g]) {
            CycMatrix shifted = mats[g];
            for (size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= p.eval(sp.xi);
            prod = prod * shifted;
          }
          CHECK(rank(prod) == 0);
          size_t found = 0;
          for (const auto& lam : distinct[g]) found += eigenspace(mats[g], lam).size();
          CHECK(found >= 1);
        }
      }
    }
  }
}
