// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "report.hpp"
#include "test_support.hpp"

using namespace cyclohecke;
namespace ct = cyclohecke::tools;
using testing_support::at_q;
using testing_support::g12;
using testing_support::g4;

namespace {

ct::RunReport run(const Dataset& ds, const std::string& q) { return ct::run_specialization(ds, at_q(ds, q), {}); }

}  // namespace

TEST_CASE("matrix rendering snapshot") {
  const std::string expected =
      "          | phi{1,0} phi{2,1} phi{1,12} | phi{2,4} | phi{2,5}\n"
      "-------------------------------------------------------------\n"
      "phi{1,0}  |        1        .         . |        . |        .\n"
      "phi{3,2}  |        1        1         . |        . |        .\n"
      "phi{4,3}  |        1        1         1 |        . |        .\n"
      "phi{2,1}  |        .        1         . |        . |        .\n"
      "phi{3,6}  |        .        1         1 |        . |        .\n"
      "phi{1,12} |        .        .         1 |        . |        .\n"
      "-------------------------------------------------------------\n"
      "phi{2,4}  |        .        .         . |        1 |        .\n"
      "-------------------------------------------------------------\n"
      "phi{2,5}  |        .        .         . |        . |        1\n";
  CHECK(ct::render_matrix(g12(), run(g12(), "zeta8")) == expected);
}

TEST_CASE("display row order follows the blocks") {
  auto r = run(g12(), "zeta8");
  std::vector<std::string> rows;
  for (size_t i : ct::display_row_order(r)) rows.push_back(g12().label(r.dm.rows[i]));
  CHECK(rows == std::vector<std::string>{"phi{1,0}", "phi{3,2}", "phi{4,3}", "phi{2,1}", "phi{3,6}", "phi{1,12}",
                                         "phi{2,4}", "phi{2,5}"});
}

TEST_CASE("JSON output round-trips and is deterministic") {
  for (const char* q : {"zeta8", "-1", "zeta5"}) {
    auto r = run(g12(), q);
    Json j = ct::report_to_json(g12(), r);
    std::string text = j.dump(2);
    CHECK(Json::parse(text).dump(2) == text);
    CHECK(ct::report_to_json(g12(), run(g12(), q)).dump(2) == text);
    CHECK(text.find("seconds") == std::string::npos);
  }
  auto r = run(g12(), "zeta8");
  Json j = ct::report_to_json(g12(), r);
  CHECK(j["group"] == "G12");
  CHECK(ct::report_to_text(g12(), r) == ct::report_to_text(g12(), run(g12(), "zeta8")));
}

TEST_CASE("P choice") {
  CHECK(ct::choose_P(g12(), ct::PChoice::poincare) == poincare_P(g12()));
  CHECK(ct::choose_P(g12(), ct::PChoice::lcm) == lcm_P(g12()));
}

TEST_CASE("data directory helpers") {
  auto files = ct::dataset_files(CYCLOHECKE_TEST_DATA_DIR);
  CHECK(files.size() >= 2);
  CHECK(std::is_sorted(files.begin(), files.end()));
  CHECK(ct::load_group(CYCLOHECKE_TEST_DATA_DIR, "G4").group.name == "G4");
  CHECK_THROWS_AS(ct::load_group(CYCLOHECKE_TEST_DATA_DIR, "G99"), ct::UsageError);
  CHECK_THROWS_AS(ct::dataset_files("/nonexistent/cyclohecke"), ct::UsageError);
}

TEST_CASE("golden corpus matches") {
  for (const char* f : {"G4.json", "G12.json"}) {
    auto records = ct::load_golden(testing_support::data_path(std::string("golden/") + f));
    CHECK(!records.empty());
    for (const auto& g : records) {
      const Dataset& ds = g.group == "G4" ? g4() : g12();
      auto outcome = ct::compare_golden(ds, run(ds, ct::golden_q_spec(g)), g);
      CAPTURE(g.group);
      CAPTURE(g.q_order);
      for (const auto& m : outcome.mismatches) MESSAGE(m);
      CHECK(outcome.pass);
    }
  }
}

TEST_CASE("golden comparison detects corruption") {
  Json doc = Json::parse(R"([{"group":"G4","q_order":6,"q_value_hint":"zeta6",
    "blocks":[{"members":["phi{1,0}","phi{1,8}","phi{1,4}"],"shape":"v"}],
    "optimal_set_note":"plus all defect-zero"}])");
  auto records = ct::parse_golden(doc);
  REQUIRE(records.size() == 1);
  auto r = run(g4(), "zeta6");
  auto outcome = ct::compare_golden(g4(), r, records[0]);
  CHECK(!outcome.pass);
  CHECK(!outcome.mismatches.empty());

  records[0].blocks[0].members = {"phi{1,0}", "phi{1,4}", "phi{1,8}"};
  CHECK(ct::compare_golden(g4(), r, records[0]).pass);
  records[0].blocks[0].shape = "ii";
  CHECK(!ct::compare_golden(g4(), r, records[0]).pass);
  records[0].blocks[0].shape = "paren";
  CHECK(ct::compare_golden(g4(), r, records[0]).pass);
  records[0].blocks[0].members = {"phi{1,0}", "phi{1,4}"};
  CHECK(!ct::compare_golden(g4(), r, records[0]).pass);

  CHECK_THROWS(ct::parse_golden(Json::parse(R"([{"group":"G4","q_order":6,"blocks":[{"members":[],"shape":"zz"}]}])")));
  CHECK(ct::golden_q_spec(records[0]) == "zeta6");
}
