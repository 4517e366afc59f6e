// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace cyclohecke::tools {

LaurentPoly choose_P(const Dataset& ds, PChoice p) {
  return p == PChoice::poincare ? poincare_P(ds) : lcm_P(ds);
}

RunReport run_specialization(const Dataset& ds, const Specialization& spec, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.spec = spec;
  r.spec_report = spec_report(ds, spec);
  r.a_values = a_values(ds);
  const LaurentPoly P = choose_P(ds, opts.p);
  r.p_choice = opts.p == PChoice::poincare ? "poincare" : "lcm";
  for (const auto& d : generic_degrees(ds, P)) r.degree_values.push_back(d.eval(spec.xi));
  DecompOptions dopts;
  dopts.words_maxlen = opts.words_maxlen;
  dopts.P = P;
  dopts.use_lambda = opts.use_lambda;
  r.dm = decomposition_matrix(ds, spec, dopts);
  r.blocks = block_partition(r.dm);
  r.lemma_gr = lemma_gr_check(r.dm, generic_degrees(ds, P), spec);
  r.basic_sets = basic_set_report(r.dm, r.a_values);
  if (!r.spec_report.semisimple) r.conjectures = conjecture_audit(ds, r.dm, spec, P);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

Json labels(const Dataset& ds, const std::vector<size_t>& idx) {
  Json a = Json::array();
  for (size_t i : idx) a.push_back(ds.label(i));
  return a;
}

Json spec_json(const RunReport& r) {
  Json j;
  j["q"] = r.spec.xi.to_string();
  j["y"] = r.spec.zeta.to_string();
  j["q_order"] = r.spec.xi.order();
  j["mu_order"] = r.spec.mu_order;
  return j;
}

Json header(const Dataset& ds, const RunReport& r) {
  Json j;
  j["format_version"] = 1;
  j["group"] = ds.group.name;
  j["spec"] = spec_json(r);
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = to_string(c.reason);
  if (c.line) {
    Json v = Json::array();
    for (const auto& x : c.line->vector) v.push_back(cyclotomic_to_json(x));
    Json e = Json::array();
    for (const auto& x : c.line->eigenvalues) e.push_back(cyclotomic_to_json(x));
    j["invariant_line"] = {{"vector", v}, {"eigenvalues", e}};
  }
  if (!c.row.empty()) j["row"] = c.row;
  return j;
}

Json basic_set_json(const Dataset& ds, const std::optional<BasicSet>& bs, const DecompositionMatrix& dm) {
  if (!bs) return nullptr;
  Json j;
  j["members"] = labels(ds, bs->members);
  Json m = Json::object();
  for (size_t c = 0; c < dm.columns.size(); ++c) m[ds.label(dm.columns[c])] = ds.label(bs->column_to_label[c]);
  j["column_map"] = m;
  return j;
}

std::string shape_name(ShapeTag t) { return to_string(t); }

}  // namespace

Json blocks_to_json(const Dataset& ds, const RunReport& r) {
  Json a = Json::array();
  for (size_t b = 0; b < r.blocks.blocks.size(); ++b) {
    Json j;
    j["members"] = labels(ds, r.blocks.blocks[b]);
    std::vector<size_t> lifts;
    for (size_t c : r.blocks.columns[b]) lifts.push_back(r.dm.columns[c]);
    j["columns"] = labels(ds, lifts);
    j["shape"] = shape_name(r.blocks.shape_tags[b]);
    a.push_back(j);
  }
  return a;
}

Json basic_sets_to_json(const Dataset& ds, const RunReport& r) {
  Json j;
  Json av = Json::object();
  for (size_t i = 0; i < ds.size(); ++i) av[ds.label(i)] = rational_to_string(r.a_values.values[i]);
  j["a_values"] = av;
  j["canonical"] = basic_set_json(ds, r.basic_sets.canonical, r.dm);
  j["optimal"] = basic_set_json(ds, r.basic_sets.optimal, r.dm);
  j["notes"] = r.basic_sets.notes;
  return j;
}

Json conjectures_to_json(const Dataset& ds, const RunReport& r) {
  if (!r.conjectures) return nullptr;
  const ConjectureReport& c = *r.conjectures;
  Json j;
  j["conj1_pass"] = c.conj1_pass;
  j["conj2_pass"] = c.conj2_pass;
  Json c1 = Json::array();
  for (const auto& e : c.conj1)
    c1.push_back({{"column", ds.label(r.dm.columns[e.column])},
                  {"order_sum", e.order_sum},
                  {"order_P", e.order_P},
                  {"pass", e.pass}});
  j["conj1"] = c1;
  Json c2 = Json::array();
  for (const auto& b : c.conj2) {
    Json jb;
    jb["members"] = labels(ds, b.members);
    jb["chi_B"] = ds.label(b.chi_b);
    jb["chi_B_tie"] = b.tie;
    Json ents = Json::array();
    for (const auto& e : b.entries) {
      Json je;
      je["label"] = ds.label(e.label);
      je["ratio"] = e.ratio ? cyclotomic_to_json(*e.ratio) : Json(nullptr);
      je["real"] = e.real;
      je["rational"] = e.rational;
      je["sign"] = e.sign;
      je["ell_mod2"] = e.ell_mod2;
      ents.push_back(je);
    }
    jb["ratios"] = ents;
    jb["B_plus"] = labels(ds, b.b_plus);
    jb["B_minus"] = labels(ds, b.b_minus);
    jb["pass"] = b.pass;
    c2.push_back(jb);
  }
  j["conj2"] = c2;
  return j;
}

Json report_to_json(const Dataset& ds, const RunReport& r) {
  Json j = header(ds, r);
  Json sv = Json::object();
  for (size_t i = 0; i < ds.size(); ++i) sv[ds.label(i)] = cyclotomic_to_json(r.spec_report.schur_values[i]);
  j["schur_values"] = sv;
  std::vector<size_t> d0;
  for (size_t i = 0; i < ds.size(); ++i)
    if (r.spec_report.defect_zero[i]) d0.push_back(i);
  j["defect_zero"] = labels(ds, d0);
  j["semisimple"] = r.spec_report.semisimple;
  Json dv = Json::object();
  for (size_t i = 0; i < ds.size(); ++i) dv[ds.label(i)] = cyclotomic_to_json(r.degree_values[i]);
  j["P"] = r.p_choice;
  j["generic_degree_values"] = dv;

  const DecompositionMatrix& dm = r.dm;
  Json m;
  m["word_length"] = dm.word_basis.length;
  m["word_count"] = dm.word_basis.words.size();
  m["modular_rank"] = dm.modular_rank;
  m["determined"] = dm.determined;
  m["rows"] = labels(ds, dm.rows);
  m["columns"] = labels(ds, dm.columns);
  m["entries"] = dm.entries;
  Json certs = Json::object();
  for (size_t i = 0; i < dm.rows.size(); ++i) certs[ds.label(dm.rows[i])] = certificate_json(dm.certificates[i]);
  m["certificates"] = certs;
  Json classes = Json::array();
  for (const auto& c : dm.classes) classes.push_back(labels(ds, c));
  m["classes"] = classes;
  Json cand = Json::array();
  for (const auto& c : dm.candidates) cand.push_back(labels(ds, c));
  m["candidates"] = cand;
  m["notes"] = dm.notes;
  j["decomposition"] = m;
  j["blocks"] = blocks_to_json(ds, r);
  Json gr = Json::object();
  for (size_t c = 0; c < dm.columns.size(); ++c) gr[ds.label(dm.columns[c])] = static_cast<bool>(r.lemma_gr[c]);
  j["lemma_gr"] = gr;
  j["basic_sets"] = basic_sets_to_json(ds, r);
  j["conjectures"] = conjectures_to_json(ds, r);
  return j;
}

Json validation_to_json(const Dataset& ds, const ValidationReport& v) {
  Json j;
  j["group"] = ds.group.name;
  j["source"] = ds.source;
  j["passed"] = v.passed();
  Json f = Json::array();
  for (const auto& e : v.failures())
    f.push_back({{"check", e.check}, {"subject", e.subject}, {"detail", e.detail}});
  j["failures"] = f;
  j["checks"] = v.entries.size();
  return j;
}

std::vector<size_t> display_row_order(const RunReport& r) {
  const DecompositionMatrix& dm = r.dm;
  std::vector<size_t> block_of_col(dm.columns.size(), 0);
  for (size_t b = 0; b < r.blocks.columns.size(); ++b)
    for (size_t c : r.blocks.columns[b]) block_of_col[c] = b;
  auto first_col = [&](size_t row) {
    for (size_t c = 0; c < dm.columns.size(); ++c)
      if (dm.entries[row][c] != 0) return c;
    return dm.columns.size();
  };
  std::vector<size_t> rows(dm.rows.size());
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::stable_sort(rows.begin(), rows.end(), [&](size_t x, size_t y) {
    size_t fx = first_col(x), fy = first_col(y);
    size_t bx = fx < dm.columns.size() ? block_of_col[fx] : SIZE_MAX;
    size_t by = fy < dm.columns.size() ? block_of_col[fy] : SIZE_MAX;
    if (bx != by) {
      // Blocks in the order of their first column.
      size_t cx = bx == SIZE_MAX ? SIZE_MAX : r.blocks.columns[bx].front();
      size_t cy = by == SIZE_MAX ? SIZE_MAX : r.blocks.columns[by].front();
      return cx < cy;
    }
    const Rational& ax = r.a_values.values[dm.rows[x]];
    const Rational& ay = r.a_values.values[dm.rows[y]];
    if (ax != ay) return ax < ay;
    if (fx != fy) return fx < fy;
    return dm.rows[x] < dm.rows[y];
  });
  return rows;
}

std::string render_matrix(const Dataset& ds, const RunReport& r) {
  const DecompositionMatrix& dm = r.dm;
  const auto order = display_row_order(r);
  std::vector<size_t> block_of_col(dm.columns.size(), 0);
  for (size_t b = 0; b < r.blocks.columns.size(); ++b)
    for (size_t c : r.blocks.columns[b]) block_of_col[c] = b;
  size_t lw = 0;
  for (size_t i : dm.rows) lw = std::max(lw, ds.label(i).size());
  std::vector<size_t> cw;
  for (size_t c : dm.columns) cw.push_back(std::max<size_t>(ds.label(c).size(), 1));

  auto cell_line = [&](const std::string& head, auto&& cell) {
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(lw)) << head << " |";
    for (size_t c = 0; c < dm.columns.size(); ++c) {
      if (c > 0 && block_of_col[c] != block_of_col[c - 1]) os << " |";
      os << ' ' << std::right << std::setw(static_cast<int>(cw[c])) << cell(c);
    }
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = cell_line("", [&](size_t c) { return ds.label(dm.columns[c]); });
  std::string rule(out.size() - 1, '-');
  out += rule + "\n";
  size_t prev_block = SIZE_MAX;
  for (size_t k = 0; k < order.size(); ++k) {
    size_t row = order[k];
    size_t fc = 0;
    while (fc < dm.columns.size() && dm.entries[row][fc] == 0) ++fc;
    size_t b = fc < dm.columns.size() ? block_of_col[fc] : SIZE_MAX;
    if (k > 0 && b != prev_block) out += rule + "\n";
    prev_block = b;
    out += cell_line(ds.label(dm.rows[row]), [&](size_t c) {
      long e = dm.entries[row][c];
      return e == 0 ? std::string(".") : std::to_string(e);
    });
  }
  return out;
}

namespace {

std::string join_labels(const Dataset& ds, const std::vector<size_t>& idx) {
  std::string s;
  for (size_t i : idx) s += (s.empty() ? "" : ", ") + ds.label(i);
  return s;
}

}  // namespace

std::string blocks_to_text(const Dataset& ds, const RunReport& r) {
  std::string out;
  for (size_t b = 0; b < r.blocks.blocks.size(); ++b)
    out += "  block " + std::to_string(b + 1) + " [" + shape_name(r.blocks.shape_tags[b]) + "]: " +
           join_labels(ds, r.blocks.blocks[b]) + "\n";
  return out;
}

std::string basic_sets_to_text(const Dataset& ds, const RunReport& r) {
  std::string out = "  a-values:";
  for (size_t i = 0; i < ds.size(); ++i)
    out += " " + ds.label(i) + "=" + rational_to_string(r.a_values.values[i]);
  out += "\n";
  const auto& bs = r.basic_sets;
  out += "  canonical basic set: " + (bs.canonical ? join_labels(ds, bs.canonical->members) : "none") + "\n";
  out += "  optimal basic set: " + (bs.optimal ? join_labels(ds, bs.optimal->members) : "none") + "\n";
  for (const auto& n : bs.notes) out += "  note: " + n + "\n";
  return out;
}

std::string conjectures_to_text(const Dataset& ds, const RunReport& r) {
  if (!r.conjectures) return "  semisimple: conjecture audits not applicable\n";
  const ConjectureReport& c = *r.conjectures;
  std::string out = std::string("  conjecture 1 (vanishing order): ") + (c.conj1_pass ? "pass" : "FAIL") + "\n";
  for (const auto& e : c.conj1)
    out += "    " + ds.label(r.dm.columns[e.column]) + ": order " + std::to_string(e.order_sum) + " vs P " +
           std::to_string(e.order_P) + "\n";
  out += std::string("  conjecture 2 (Broue invariants): ") + (c.conj2_pass ? "pass" : "FAIL") + "\n";
  for (const auto& b : c.conj2) {
    out += "    chi_B = " + ds.label(b.chi_b) + (b.tie ? " (a-value tie)" : "") + ":";
    for (const auto& e : b.entries)
      out += " " + ds.label(e.label) + "=" + (e.ratio ? e.ratio->to_string() : std::string("none"));
    out += "\n      B+ = {" + join_labels(ds, b.b_plus) + "}  B- = {" + join_labels(ds, b.b_minus) + "}\n";
  }
  return out;
}

std::string report_to_text(const Dataset& ds, const RunReport& r) {
  std::string out = ds.group.name + " at " + r.spec.to_string() + "\n";
  out += "  Schur values:";
  for (size_t i = 0; i < ds.size(); ++i) out += " " + r.spec_report.schur_values[i].to_string();
  out += "\n  generic degrees (P = " + r.p_choice + "):";
  for (size_t i = 0; i < ds.size(); ++i) out += " " + r.degree_values[i].to_string();
  out += std::string("\n  semisimple: ") + (r.spec_report.semisimple ? "yes" : "no") + "\n";
  out += "  words up to length " + std::to_string(r.dm.word_basis.length) + ", modular rank " +
         std::to_string(r.dm.modular_rank) + (r.dm.determined ? "" : ", UNDETERMINED") + "\n\n";
  out += render_matrix(ds, r) + "\n";
  for (size_t i = 0; i < r.dm.rows.size(); ++i) {
    const Certificate& c = r.dm.certificates[i];
    out += "  " + ds.label(r.dm.rows[i]) + ": " + to_string(c.verdict);
    if (c.reason != Reason::none) out += std::string(" (") + to_string(c.reason) + ")";
    if (c.line) out += " (invariant line)";
    out += "\n";
  }
  for (const auto& n : r.dm.notes) out += "  note: " + n + "\n";
  out += "\n" + blocks_to_text(ds, r) + basic_sets_to_text(ds, r) + conjectures_to_text(ds, r);
  return out;
}

std::vector<std::string> dataset_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw UsageError("data directory not found: " + dir);
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

Dataset load_group(const std::string& dir, const std::string& group) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(dir) / (group + ".json");
  if (!fs::exists(p)) throw UsageError("unknown group '" + group + "' (no " + p.string() + ")");
  return load_dataset(p.string());
}

std::vector<GoldenRecord> parse_golden(const Json& j) {
  if (!j.is_array()) throw SchemaError("golden", "expected an array of records");
  std::vector<GoldenRecord> out;
  for (const auto& e : j) {
    GoldenRecord g;
    g.group = e.at("group").get<std::string>();
    g.q_order = e.at("q_order").get<long>();
    if (e.contains("q_value_hint") && !e["q_value_hint"].is_null())
      g.q_value_hint = e["q_value_hint"].get<std::string>();
    for (const auto& b : e.at("blocks")) {
      GoldenBlock gb;
      gb.members = b.at("members").get<std::vector<std::string>>();
      gb.shape = b.at("shape").get<std::string>();
      static const std::set<std::string> shapes{"i", "ii", "iii", "iv", "v", "paren"};
      if (!shapes.count(gb.shape)) throw SchemaError("golden", "unknown shape '" + gb.shape + "'");
      g.blocks.push_back(std::move(gb));
    }
    g.optimal_set_note = e.value("optimal_set_note", "");
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldenRecord> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  try {
    return parse_golden(Json::parse(in));
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string golden_q_spec(const GoldenRecord& g) {
  if (g.q_value_hint) return *g.q_value_hint;
  if (g.q_order == 1) return "1";
  if (g.q_order == 2) return "-1";
  return "zeta" + std::to_string(g.q_order);
}

GoldenOutcome compare_golden(const Dataset& ds, const RunReport& r, const GoldenRecord& g) {
  GoldenOutcome out;
  const std::string where = g.group + " q_order " + std::to_string(g.q_order);
  auto fail = [&](const std::string& m) {
    out.pass = false;
    out.mismatches.push_back(where + ": " + m);
  };
  if (r.spec.xi.order() != g.q_order) fail("specialization has order " + std::to_string(r.spec.xi.order()));

  // Non-defect-zero lifts of each computed block, in data order.
  std::vector<std::vector<size_t>> lifts(r.blocks.blocks.size());
  for (size_t b = 0; b < r.blocks.blocks.size(); ++b) {
    for (size_t c : r.blocks.columns[b]) {
      size_t l = r.dm.columns[c];
      if (!r.spec_report.defect_zero[l]) lifts[b].push_back(l);
    }
    std::sort(lifts[b].begin(), lifts[b].end());
  }
  std::vector<bool> covered(r.blocks.blocks.size(), false);
  std::vector<size_t> golden_members;
  for (size_t k = 0; k < g.blocks.size(); ++k) {
    const GoldenBlock& gb = g.blocks[k];
    const std::string name = "block " + std::to_string(k + 1);
    std::vector<size_t> want;
    try {
      for (const auto& m : gb.members) want.push_back(ds.index_of(m));
    } catch (const LabelMismatch& e) {
      fail(name + ": " + e.what());
      continue;
    }
    golden_members.insert(golden_members.end(), want.begin(), want.end());
    std::optional<size_t> found;
    for (size_t b = 0; b < lifts.size() && !want.empty(); ++b)
      if (std::find(lifts[b].begin(), lifts[b].end(), want[0]) != lifts[b].end()) found = b;
    if (!found) {
      fail(name + ": " + gb.members[0] + " is not a column lift of any computed block");
      continue;
    }
    covered[*found] = true;
    if (lifts[*found] != want) {
      std::string got;
      for (size_t l : lifts[*found]) got += (got.empty() ? "" : ", ") + ds.label(l);
      fail(name + ": members differ (computed lifts in label order: " + got + ")");
    }
    if (gb.shape != "paren" && gb.shape != shape_name(r.blocks.shape_tags[*found]))
      fail(name + ": shape " + gb.shape + " expected, computed " + shape_name(r.blocks.shape_tags[*found]));
  }
  for (size_t b = 0; b < lifts.size(); ++b)
    if (!covered[b] && !lifts[b].empty()) {
      std::string got;
      for (size_t l : r.blocks.blocks[b]) got += (got.empty() ? "" : ", ") + ds.label(l);
      fail("computed block {" + got + "} has no golden record");
    }

  if (!r.basic_sets.optimal) {
    fail("no optimal basic set");
  } else {
    std::vector<size_t> expect = golden_members;
    for (size_t i = 0; i < ds.size(); ++i)
      if (r.spec_report.defect_zero[i]) expect.push_back(i);
    std::sort(expect.begin(), expect.end());
    if (expect != r.basic_sets.optimal->members) fail("optimal basic set differs");
  }
  return out;
}

}  // namespace cyclohecke::tools
