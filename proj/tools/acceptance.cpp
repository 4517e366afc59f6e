// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>

#include "report.hpp"

#ifndef CYCLOHECKE_DEFAULT_DATA_DIR
#define CYCLOHECKE_DEFAULT_DATA_DIR "data"
#endif

using namespace cyclohecke;
namespace ct = cyclohecke::tools;

namespace {

enum class Outcome { pass, fail, skip };

struct Check {
  Outcome outcome = Outcome::pass;
  std::string detail;
};

class Failed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failed(what);
}

std::string data_dir;

const Dataset& group(const std::string& name) {
  static std::map<std::string, Dataset> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, ct::load_group(data_dir, name)).first;
  return it->second;
}

Specialization at(const Dataset& ds, const std::string& q) {
  return Specialization::from_q(parse_q_spec(q), ds.group.mu_order);
}

// Every non-semisimple specialization listed in the golden corpus.
std::vector<std::pair<std::string, std::string>> shipped_points() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* f : {"G4.json", "G12.json"})
    for (const auto& g : ct::load_golden(data_dir + "/golden/" + f)) out.emplace_back(g.group, ct::golden_q_spec(g));
  return out;
}

std::vector<size_t> labels_of(const Dataset& ds, std::initializer_list<const char*> names) {
  std::vector<size_t> out;
  for (const char* n : names) out.push_back(ds.index_of(n));
  return out;
}

Check c1_schur_values() {
  const Dataset& ds = group("G12");
  auto r = spec_report(ds, at(ds, "zeta8"));
  const std::vector<Cyclotomic> expected{0, 0, 0, 4, -288, 0, 0, 0};
  require(r.schur_values == expected, "Schur values differ");
  return {};
}

Check c2_generic_degrees() {
  const Dataset& ds = group("G12");
  const std::vector<Cyclotomic> expected{1, 1, 4, 0, 0, -3, -3, 2};
  for (const LaurentPoly& P : {poincare_P(ds), lcm_P(ds)}) {
    auto deg = generic_degrees(ds, P);
    std::vector<Cyclotomic> got;
    for (const auto& d : deg) got.push_back(d.eval(RootOfUnity(8, 1)));
    require(got == expected, "generic degrees differ");
  }
  return {};
}

Check c3_invariant_line() {
  const Dataset& ds = group("G12");
  auto sp = at(ds, "zeta8");
  auto mats = specialize_rep(ds.representations[ds.index_of("phi{2,1}")], sp);
  std::vector<std::vector<Cyclotomic>> allowed(mats.size(), {Cyclotomic(1), Cyclotomic::root(4, 1)});
  require(common_invariant_line(mats, allowed).empty(), "an invariant line was found");
  return {};
}

Check c4_matrix() {
  const Dataset& ds = group("G12");
  auto dm = decomposition_matrix(ds, at(ds, "zeta8"));
  require(dm.determined, "matrix undetermined");
  require(dm.columns == labels_of(ds, {"phi{1,0}", "phi{2,1}", "phi{1,12}", "phi{2,4}", "phi{2,5}"}),
          "column lifts differ");
  const std::vector<std::pair<const char*, std::vector<long>>> rows{
      {"phi{1,0}", {1, 0, 0, 0, 0}},  {"phi{3,2}", {1, 1, 0, 0, 0}}, {"phi{4,3}", {1, 1, 1, 0, 0}},
      {"phi{2,1}", {0, 1, 0, 0, 0}},  {"phi{3,6}", {0, 1, 1, 0, 0}}, {"phi{1,12}", {0, 0, 1, 0, 0}},
      {"phi{2,4}", {0, 0, 0, 1, 0}},  {"phi{2,5}", {0, 0, 0, 0, 1}}};
  require(dm.rows.size() == rows.size(), "row count differs");
  for (const auto& [label, expected] : rows)
    require(dm.entries[dm.row_of(ds.index_of(label))] == expected, std::string("row ") + label + " differs");
  return {};
}

Check c5_golden() {
  size_t n = 0;
  for (const char* f : {"G4.json", "G12.json"}) {
    for (const auto& g : ct::load_golden(data_dir + "/golden/" + f)) {
      const Dataset& ds = group(g.group);
      auto r = ct::run_specialization(ds, at(ds, ct::golden_q_spec(g)), {});
      auto outcome = ct::compare_golden(ds, r, g);
      require(outcome.pass, g.group + " q=" + ct::golden_q_spec(g) + ": " +
                                (outcome.mismatches.empty() ? "" : outcome.mismatches[0]));
      ++n;
    }
  }
  require(n == 8, "expected 8 golden records, found " + std::to_string(n));
  return {Outcome::pass, "8 records"};
}

Cyclotomic random_cyc(std::mt19937_64& rng, long n) {
  std::map<long, Rational> m;
  for (int t = 0; t < 4; ++t) {
    Rational r(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
    r.canonicalize();
    m[static_cast<long>(rng() % static_cast<unsigned long>(n))] += r;
  }
  return Cyclotomic::from_exponents(n, m);
}

LaurentPoly random_lp(std::mt19937_64& rng, long n) {
  LaurentPoly::Terms t;
  for (int i = static_cast<int>(rng() % 4); i > 0; --i) t[static_cast<long>(rng() % 13) - 6] += random_cyc(rng, n);
  return LaurentPoly(Var::y, t);
}

// Dimension conservation and the character identity on words one longer
// than the basis used to build the matrix.
void check_matrix_invariants(const Dataset& ds, const DecompositionMatrix& dm) {
  std::vector<std::vector<CycMatrix>> reps;
  for (const auto& rep : ds.representations) reps.push_back(specialize_rep(rep, dm.spec));
  auto words = words_up_to(ds.group.generators.size(), dm.word_basis.length + 1);
  auto vecs = character_vectors(reps, words);
  for (size_t r = 0; r < dm.rows.size(); ++r) {
    long dim = 0;
    for (size_t c = 0; c < dm.columns.size(); ++c) dim += dm.entries[r][c] * ds.characters[dm.columns[c]].dim;
    require(dim == ds.characters[dm.rows[r]].dim, "dimension not conserved for " + ds.label(dm.rows[r]));
    for (size_t w = 0; w < words.size(); ++w) {
      Cyclotomic s;
      for (size_t c = 0; c < dm.columns.size(); ++c)
        if (dm.entries[r][c] != 0) s += Cyclotomic(dm.entries[r][c]) * vecs[dm.columns[c]][w];
      require(s == vecs[dm.rows[r]][w], "character identity fails for " + ds.label(dm.rows[r]));
    }
  }
}

Check c6_properties() {
  std::mt19937_64 rng(6);
  const int cases = 10000;
  for (int i = 0; i < cases; ++i) {
    long n = 1 + static_cast<long>(rng() % 48);
    Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
    require(a + b == b + a && a * b == b * a, "commutativity");
    require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
    require(a * (b + c) == a * b + a * c, "distributivity");
    require(a.is_zero() || a * a.inv() == Cyclotomic(1), "inverse");
  }
  for (int i = 0; i < cases; ++i) {
    long n = 1 + static_cast<long>(rng() % 24);
    LaurentPoly a = random_lp(rng, n), b = random_lp(rng, n), c = random_lp(rng, n);
    require(a + b == b + a && a * b == b * a, "ring commutativity");
    require((a + b) + c == a + (b + c), "ring associativity");
    require(a * (b + c) == a * b + a * c, "ring distributivity");
    if (i % 8 == 0) require((a * b) * c == a * (b * c), "ring associativity");
  }
  for (const char* g : {"G4", "G12"}) require(validate_dataset(group(g)).passed(), std::string(g) + " fails validation");
  for (const auto& [g, q] : shipped_points()) {
    const Dataset& ds = group(g);
    check_matrix_invariants(ds, decomposition_matrix(ds, at(ds, q)));
  }
  for (const char* g : {"G4", "G12"}) {
    const Dataset& ds = group(g);
    auto crit = critical_orders(ds);
    int found = 0;
    for (long m = 3; found < 3; ++m) {
      if (std::find(crit.begin(), crit.end(), m) != crit.end()) continue;
      auto dm = decomposition_matrix(ds, Specialization::from_q(RootOfUnity(m, 1), ds.group.mu_order));
      require(dm.columns.size() == ds.size(), std::string(g) + ": not the identity at order " + std::to_string(m));
      for (size_t r = 0; r < ds.size(); ++r)
        for (size_t c = 0; c < ds.size(); ++c)
          require(dm.entries[r][c] == (r == c ? 1 : 0), std::string(g) + ": not the identity");
      check_matrix_invariants(ds, dm);
      ++found;
    }
  }
  return {Outcome::pass, "2x10^4 random cases"};
}

Check c7_lemma_gr() {
  for (const auto& [g, q] : shipped_points()) {
    const Dataset& ds = group(g);
    auto sp = at(ds, q);
    auto dm = decomposition_matrix(ds, sp);
    require(dm.determined, g + " q=" + q + ": undetermined");
    auto gr = lemma_gr_check(dm, generic_degrees(ds, lcm_P(ds)), sp);
    require(std::all_of(gr.begin(), gr.end(), [](bool b) { return b; }), g + " q=" + q + ": Lemma GR fails");
    auto bs = basic_set_report(dm, a_values(ds));
    require(bs.canonical.has_value(), g + " q=" + q + ": no canonical basic set");
    require(bs.optimal.has_value(), g + " q=" + q + ": no optimal basic set");
  }
  return {};
}

// Looks for a row bijection keeping (dim, b) and a column bijection under
// which the two matrices coincide.
bool agree_up_to_label_permutation(const Dataset& ds, const DecompositionMatrix& a, const DecompositionMatrix& b) {
  if (a.rows.size() != b.rows.size() || a.columns.size() != b.columns.size()) return false;
  std::vector<size_t> perm(a.columns.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto keyed = [&](const DecompositionMatrix& dm, const std::vector<size_t>& p) {
    std::vector<std::tuple<int, int, std::vector<long>>> rows;
    for (size_t r = 0; r < dm.rows.size(); ++r) {
      std::vector<long> v;
      for (size_t c : p) v.push_back(dm.entries[r][c]);
      const auto& ch = ds.characters[dm.rows[r]];
      rows.emplace_back(ch.dim, ch.b, v);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  const auto target = keyed(a, perm);
  do {
    if (keyed(b, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Check c8_order_independence() {
  const Dataset& ds = group("G12");
  auto a = decomposition_matrix(ds, at(ds, "zeta8"));
  auto b = decomposition_matrix(ds, at(ds, "E(8)^7"));
  require(a.determined && b.determined, "undetermined matrix");
  require(agree_up_to_label_permutation(ds, a, b), "no (dim, b)-preserving row permutation");
  return {Outcome::pass, "G12, q=E(8) and q=E(8)^7"};
}

Check c9_conjectures() {
  for (const auto& [g, q] : shipped_points()) {
    const Dataset& ds = group(g);
    auto sp = at(ds, q);
    auto dm = decomposition_matrix(ds, sp);
    auto rep = conjecture_audit(ds, dm, sp, lcm_P(ds));
    require(rep.conj1_pass, g + " q=" + q + ": vanishing orders differ");
    require(rep.conj2_pass, g + " q=" + q + ": a Broue invariant is not a nonzero real");
    for (const auto& b : rep.conj2)
      require(b.b_plus.size() + b.b_minus.size() == b.members.size(), g + " q=" + q + ": B+/B- incomplete");
  }
  return {};
}

Check c10_g10() {
  namespace fs = std::filesystem;
  if (!fs::exists(fs::path(data_dir) / "G10.json")) return {Outcome::skip, "G10 dataset not shipped"};
  const Dataset& ds = group("G10");
  const Cyclotomic one(1), z3 = Cyclotomic::root(3, 1), z3s = Cyclotomic::root(3, 2), i = Cyclotomic::root(4, 1);
  const std::vector<std::tuple<const char*, Cyclotomic, long>> table{
      {"phi{1,0}", one, 0},        {"phi{1,8}", one, 4},         {"phi{2,1}", one, 5},
      {"phi{2,4}", -one, 5},       {"phi{1,6}", one, 6},         {"phi{1,12}", one, 6},
      {"phi{2,5}", -one, 7},       {"phi{2,8}", one, 7},         {"phi{2,7}'", one, 8},
      {"phi{3,2}", z3s, 8},        {"phi{2,7}''", -one, 8},      {"phi{3,6}'", one, 8},
      {"phi{1,16}", one, 8},       {"phi{3,10}''", z3, 8},       {"phi{4,9}", -one, 9},
      {"phi{4,3}", one, 9},        {"phi{2,9}", one, 9},         {"phi{2,12}", -one, 9},
      {"phi{2,11}''", one, 10},    {"phi{3,4}", z3, 10},         {"phi{2,11}'", -one, 10},
      {"phi{3,10}'", z3, 10},      {"phi{1,14}", one, 10},       {"phi{3,12}''", one, 10},
      {"phi{1,20}", one, 10},      {"phi{4,11}", -i, 10},        {"phi{3,14}", z3s, 10},
      {"phi{4,5}", i, 10},         {"phi{3,6}''", one, 10},      {"phi{3,8}'", z3s, 10},
      {"phi{4,13}", one, 11},      {"phi{4,7}", -one, 11},       {"phi{2,13}", -one, 11},
      {"phi{2,10}", one, 11},      {"phi{2,15}'", one, 12},      {"phi{3,8}''", z3s, 12},
      {"phi{3,12}'", one, 12},     {"phi{3,16}", z3, 12},        {"phi{1,18}", one, 12},
      {"phi{2,15}''", -one, 12},   {"phi{2,14}", -one, 13},      {"phi{2,17}", one, 13},
      {"phi{1,22}", one, 14},      {"phi{1,28}", one, 14},       {"phi{2,18}", one, 15},
      {"phi{2,21}", -one, 15},     {"phi{1,26}", one, 16},       {"phi{1,34}", one, 20}};
  Word st2 = parse_word(ds.group, {"s", "t", "s", "t"});
  require(verify_central(ds, st2), "(st)^2 is not central");
  LambdaTable lt = lambda_table(ds, st2);
  for (const auto& [label, unit, e] : table)
    require(lt.values[ds.index_of(label)] == LaurentPoly::monomial(unit, e), std::string("lambda differs at ") + label);
  auto sp = at(ds, "zeta7");
  auto sr = spec_report(ds, sp);
  std::vector<size_t> nd;
  for (size_t k = 0; k < ds.size(); ++k)
    if (!sr.defect_zero[k]) nd.push_back(k);
  auto expected_nd = labels_of(ds, {"phi{1,0}", "phi{1,12}", "phi{2,8}", "phi{2,17}", "phi{1,28}", "phi{1,34}"});
  std::sort(expected_nd.begin(), expected_nd.end());
  require(nd == expected_nd, "non-defect-zero set differs at zeta7");
  auto classes = lambda_partition(ds, sp, lt);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  std::vector<std::vector<size_t>> expected{labels_of(ds, {"phi{1,0}", "phi{2,8}", "phi{1,28}"}),
                                            labels_of(ds, {"phi{1,12}", "phi{2,17}", "phi{1,34}"})};
  for (auto& c : expected) std::sort(c.begin(), c.end());
  std::sort(expected.begin(), expected.end());
  require(classes == expected, "lambda partition at zeta7 differs from B1/B2");
  return {Outcome::pass, "48 lambda values, 2 classes"};
}

}  // namespace

int main(int argc, char** argv) {
  data_dir = argc > 1 ? argv[1] : CYCLOHECKE_DEFAULT_DATA_DIR;
  struct Criterion {
    int id;
    double budget;
    const char* what;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1, "G12 q=zeta8 Schur values", c1_schur_values},
      {2, 1, "G12 q=zeta8 generic degrees", c2_generic_degrees},
      {3, 1, "G12 q=zeta8 phi{2,1} has no invariant line", c3_invariant_line},
      {4, 5, "G12 q=zeta8 decomposition matrix", c4_matrix},
      {5, 30, "golden corpus", c5_golden},
      {6, 60, "property suite", c6_properties},
      {7, 30, "Lemma GR and basic sets", c7_lemma_gr},
      {8, 10, "order independence", c8_order_independence},
      {9, 30, "conjecture audits", c9_conjectures},
      {10, 30, "G10 lambda table and blocks at zeta7", c10_g10},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res = {Outcome::fail, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.outcome == Outcome::pass && secs >= c.budget) {
      res.outcome = Outcome::fail;
      res.detail = "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    const char* tag = res.outcome == Outcome::pass ? "PASS" : res.outcome == Outcome::fail ? "FAIL" : "SKIP";
    all_ok = all_ok && res.outcome != Outcome::fail;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << tag << "  " << c.what << " [" << std::fixed
              << std::setprecision(2) << secs << " s]";
    if (!res.detail.empty()) std::cout << " (" << res.detail << ")";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}
