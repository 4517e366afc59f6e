// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cyclohecke {

size_t Dataset::index_of(const std::string& label) const {
  for (size_t i = 0; i < characters.size(); ++i)
    if (characters[i].label == label) return i;
  throw LabelMismatch("unknown character label '" + label + "' in " + group.name);
}

Word parse_word(const GroupSpec& g, const std::vector<std::string>& symbols) {
  Word w;
  w.reserve(symbols.size());
  for (const auto& s : symbols) {
    int idx = -1;
    for (size_t k = 0; k < g.generators.size(); ++k)
      if (g.generators[k] == s) idx = static_cast<int>(k);
    if (idx < 0) throw UnknownSymbol("unknown generator '" + s + "'");
    w.push_back(idx);
  }
  return w;
}

std::string word_to_string(const GroupSpec& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int k : w) out += g.generators.at(static_cast<size_t>(k));
  return out;
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw SchemaError(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Word word_from_json(const GroupSpec& g, const Json& j, const std::string& where) {
  try {
    return parse_word(g, string_list(j, where));
  } catch (const UnknownSymbol& e) {
    throw SchemaError(where, e.what());
  }
}

Json word_to_json(const GroupSpec& g, const Word& w) {
  Json a = Json::array();
  for (int k : w) a.push_back(g.generators.at(static_cast<size_t>(k)));
  return a;
}

LpMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where, "expected a nonempty square matrix");
  const size_t n = j.size();
  LpMatrix m(n, n);
  for (size_t r = 0; r < n; ++r) {
    std::string wr = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != n) throw SchemaError(wr, "matrix is not square");
    for (size_t c = 0; c < n; ++c) {
      m(r, c) = laurent_from_json(j[r][c], wr + "[" + std::to_string(c) + "]");
      if (m(r, c).var() != Var::q)
        throw SchemaError(wr + "[" + std::to_string(c) + "]", "matrix entries must be in q");
    }
  }
  return m;
}

Json matrix_to_json(const LpMatrix& m) {
  Json a = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(laurent_to_json(m(r, c)));
    a.push_back(row);
  }
  return a;
}

LpMatrix identity_lp(size_t n) {
  return LpMatrix::identity(n, LaurentPoly::constant(Cyclotomic(1)), LaurentPoly(Var::q));
}

}  // namespace

Dataset parse_dataset(const Json& j, const std::string& source) {
  Dataset ds;
  ds.source = source;
  const std::string root = source;
  if (!j.is_object()) throw SchemaError(root, "top level must be an object");
  if (j.contains("format_version") && j.at("format_version") != 1)
    throw SchemaError(root + ".format_version", "unsupported format version");

  const Json& g = field(j, "group", root);
  GroupSpec& gs = ds.group;
  const std::string gw = root + ".group";
  const Json& name = field(g, "name", gw);
  if (!name.is_string()) throw SchemaError(gw + ".name", "expected a string");
  gs.name = name.get<std::string>();
  gs.generators = string_list(field(g, "generators", gw), gw + ".generators");
  if (gs.generators.empty()) throw SchemaError(gw + ".generators", "no generators");
  if (std::set<std::string>(gs.generators.begin(), gs.generators.end()).size() !=
      gs.generators.size())
    throw SchemaError(gw + ".generators", "duplicate generator symbol");

  const Json& rels = field(g, "braid_relations", gw);
  if (!rels.is_array()) throw SchemaError(gw + ".braid_relations", "expected an array");
  for (size_t i = 0; i < rels.size(); ++i) {
    std::string w = gw + ".braid_relations[" + std::to_string(i) + "]";
    if (!rels[i].is_array() || rels[i].size() < 2)
      throw SchemaError(w, "a relation chain needs at least two words");
    std::vector<Word> chain;
    for (size_t k = 0; k < rels[i].size(); ++k)
      chain.push_back(word_from_json(gs, rels[i][k], w + "[" + std::to_string(k) + "]"));
    gs.braid_relations.push_back(std::move(chain));
  }

  const Json& params = field(g, "parameters", gw);
  if (!params.is_array() || params.size() != gs.generators.size())
    throw SchemaError(gw + ".parameters", "expected one parameter list per generator");
  for (size_t i = 0; i < params.size(); ++i) {
    std::string w = gw + ".parameters[" + std::to_string(i) + "]";
    if (!params[i].is_array() || params[i].empty())
      throw SchemaError(w, "expected a nonempty list");
    std::vector<LaurentPoly> ps;
    for (size_t k = 0; k < params[i].size(); ++k) {
      LaurentPoly p = laurent_from_json(params[i][k], w + "[" + std::to_string(k) + "]");
      for (const auto& other : ps)
        if (other == p) throw SchemaError(w, "parameters must be pairwise distinct");
      ps.push_back(std::move(p));
    }
    gs.parameters.push_back(std::move(ps));
  }

  const Json& mu = field(g, "mu_order", gw);
  if (!mu.is_number_integer() || mu.get<long>() < 1)
    throw SchemaError(gw + ".mu_order", "expected a positive integer");
  gs.mu_order = mu.get<long>();

  if (g.contains("central_candidates")) {
    const Json& cc = g.at("central_candidates");
    if (!cc.is_array()) throw SchemaError(gw + ".central_candidates", "expected an array");
    for (size_t i = 0; i < cc.size(); ++i)
      gs.central_candidates.push_back(
          word_from_json(gs, cc[i], gw + ".central_candidates[" + std::to_string(i) + "]"));
  }
  if (g.contains("poincare_label")) {
    if (!g.at("poincare_label").is_string())
      throw SchemaError(gw + ".poincare_label", "expected a string");
    gs.poincare_label = g.at("poincare_label").get<std::string>();
  }

  const Json& chars = field(j, "characters", root);
  if (!chars.is_array() || chars.empty())
    throw SchemaError(root + ".characters", "expected a nonempty array");
  std::set<std::string> labels;
  for (size_t i = 0; i < chars.size(); ++i) {
    std::string w = root + ".characters[" + std::to_string(i) + "]";
    IrrChar c;
    const Json& l = field(chars[i], "label", w);
    const Json& d = field(chars[i], "dim", w);
    if (!l.is_string()) throw SchemaError(w + ".label", "expected a string");
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw SchemaError(w + ".dim", "expected a positive integer");
    c.label = l.get<std::string>();
    c.dim = d.get<int>();
    if (chars[i].contains("b")) {
      if (!chars[i].at("b").is_number_integer() || chars[i].at("b").get<int>() < 0)
        throw SchemaError(w + ".b", "expected a nonnegative integer");
      c.b = chars[i].at("b").get<int>();
    }
    if (!labels.insert(c.label).second) throw SchemaError(w, "duplicate label " + c.label);
    ds.characters.push_back(std::move(c));
  }

  const Json& reps = field(j, "representations", root);
  const Json& schur = field(j, "schur", root);
  if (!reps.is_object()) throw SchemaError(root + ".representations", "expected an object");
  if (!schur.is_object()) throw SchemaError(root + ".schur", "expected an object");
  for (const auto& [k, v] : reps.items())
    if (!labels.count(k)) throw LabelMismatch("representation for unknown label " + k);
  for (const auto& [k, v] : schur.items())
    if (!labels.count(k)) throw LabelMismatch("Schur element for unknown label " + k);

  for (const auto& c : ds.characters) {
    if (!reps.contains(c.label)) throw LabelMismatch("missing representation for " + c.label);
    if (!schur.contains(c.label)) throw LabelMismatch("missing Schur element for " + c.label);
    std::string w = root + ".representations." + c.label;
    const Json& mats = reps.at(c.label);
    if (!mats.is_array() || mats.size() != gs.generators.size())
      throw SchemaError(w, "expected one matrix per generator");
    Representation r;
    r.label = c.label;
    for (size_t k = 0; k < mats.size(); ++k) {
      r.matrices.push_back(matrix_from_json(mats[k], w + "[" + std::to_string(k) + "]"));
      if (r.matrices.back().rows() != static_cast<size_t>(c.dim))
        throw SchemaError(w + "[" + std::to_string(k) + "]", "matrix size differs from dim");
    }
    ds.representations.push_back(std::move(r));
    LaurentPoly s = laurent_from_json(schur.at(c.label), root + ".schur." + c.label);
    if (s.var() != Var::q) throw SchemaError(root + ".schur." + c.label, "expected variable q");
    if (s.is_zero()) throw SchemaError(root + ".schur." + c.label, "zero Schur element");
    ds.schur.push_back(std::move(s));
  }
  if (gs.poincare_label && !labels.count(*gs.poincare_label))
    throw LabelMismatch("poincare_label names unknown label " + *gs.poincare_label);
  return ds;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_dataset(j, path);
}

Json dataset_to_json(const Dataset& ds) {
  const GroupSpec& g = ds.group;
  Json group = Json::object();
  group["name"] = g.name;
  group["generators"] = g.generators;
  Json rels = Json::array();
  for (const auto& chain : g.braid_relations) {
    Json c = Json::array();
    for (const auto& w : chain) c.push_back(word_to_json(g, w));
    rels.push_back(c);
  }
  group["braid_relations"] = rels;
  Json params = Json::array();
  for (const auto& ps : g.parameters) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(laurent_to_json(p));
    params.push_back(a);
  }
  group["parameters"] = params;
  group["mu_order"] = g.mu_order;
  Json cc = Json::array();
  for (const auto& w : g.central_candidates) cc.push_back(word_to_json(g, w));
  group["central_candidates"] = cc;
  if (g.poincare_label) group["poincare_label"] = *g.poincare_label;

  Json chars = Json::array();
  Json reps = Json::object();
  Json schur = Json::object();
  for (size_t i = 0; i < ds.size(); ++i) {
    const auto& c = ds.characters[i];
    chars.push_back(Json{{"label", c.label}, {"dim", c.dim}, {"b", c.b}});
    Json mats = Json::array();
    for (const auto& m : ds.representations[i].matrices) mats.push_back(matrix_to_json(m));
    reps[c.label] = mats;
    schur[c.label] = laurent_to_json(ds.schur[i]);
  }
  Json out = Json::object();
  out["format_version"] = 1;
  out["group"] = group;
  out["characters"] = chars;
  out["representations"] = reps;
  out["schur"] = schur;
  return out;
}

LpMatrix eval_word(const Representation& rep, const Word& word) {
  LpMatrix m = identity_lp(static_cast<size_t>(rep.dim()));
  for (int k : word) {
    if (k < 0 || static_cast<size_t>(k) >= rep.matrices.size())
      throw UnknownSymbol("generator index out of range");
    m = m * rep.matrices[static_cast<size_t>(k)];
  }
  return m;
}

LpMatrix eval_word(const GroupSpec& g, const Representation& rep,
                   const std::vector<std::string>& symbols) {
  return eval_word(rep, parse_word(g, symbols));
}

LaurentPoly char_value(const Representation& rep, const Word& word) {
  return eval_word(rep, word).trace();
}

bool ValidationReport::passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

std::vector<ValidationEntry> ValidationReport::failures() const {
  std::vector<ValidationEntry> out;
  for (const auto& e : entries)
    if (!e.passed) out.push_back(e);
  return out;
}

ValidationReport validate_dataset(const Dataset& ds) {
  ValidationReport rep;
  const GroupSpec& g = ds.group;
  for (size_t i = 0; i < ds.size(); ++i) {
    const Representation& r = ds.representations[i];
    const std::string& label = ds.label(i);
    for (const auto& chain : g.braid_relations) {
      LpMatrix first = eval_word(r, chain[0]);
      bool ok = true;
      std::string bad;
      for (size_t k = 1; k < chain.size(); ++k) {
        if (eval_word(r, chain[k]) != first) {
          ok = false;
          bad = word_to_string(g, chain[k]);
        }
      }
      std::string subject = label + " " + word_to_string(g, chain[0]);
      for (size_t k = 1; k < chain.size(); ++k) subject += "=" + word_to_string(g, chain[k]);
      rep.entries.push_back({"a", subject, ok, ok ? "" : "word " + bad + " differs"});
    }
    const size_t n = static_cast<size_t>(r.dim());
    for (size_t k = 0; k < g.generators.size(); ++k) {
      LpMatrix prod = identity_lp(n);
      for (const auto& p : g.parameters[k]) {
        LpMatrix shifted = r.matrices[k];
        for (size_t d = 0; d < n; ++d) shifted(d, d) -= p;
        prod = prod * shifted;
      }
      bool ok = true;
      for (size_t a = 0; a < n && ok; ++a)
        for (size_t b = 0; b < n && ok; ++b) ok = prod(a, b).is_zero();
      rep.entries.push_back({"b", label + " " + g.generators[k], ok,
                             ok ? "" : "deformation polynomial does not annihilate"});
    }
    LaurentPoly tr = char_value(r, Word{});
    bool ok = tr == LaurentPoly::constant(Cyclotomic(ds.characters[i].dim));
    rep.entries.push_back({"c", label, ok, ok ? "" : "trace at identity is " + tr.to_string()});
  }
  // Sum of dim/s over a common multiple of the Schur elements.
  LaurentPoly l = LaurentPoly::constant(Cyclotomic(1));
  for (const auto& s : ds.schur) l = poly_lcm(l, s);
  LaurentPoly sum(Var::q);
  bool ok = true;
  std::string detail;
  for (size_t i = 0; i < ds.size(); ++i) {
    try {
      sum += l.exact_div(ds.schur[i]) * Cyclotomic(ds.characters[i].dim);
    } catch (const InexactDivision&) {
      ok = false;
      detail = "Schur element of " + ds.label(i) + " does not divide the common multiple";
    }
  }
  if (ok && sum != l) {
    ok = false;
    detail = "sum of dim/s differs from 1";
  }
  rep.entries.push_back({"d", g.name, ok, detail});
  return rep;
}

}  // namespace cyclohecke
