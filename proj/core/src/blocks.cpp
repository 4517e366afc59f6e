// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclohecke {

const char* to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::i:
      return "i";
    case ShapeTag::ii:
      return "ii";
    case ShapeTag::iii:
      return "iii";
    case ShapeTag::iv:
      return "iv";
    case ShapeTag::v:
      return "v";
    case ShapeTag::defect_zero_singleton:
      return "defect_zero_singleton";
    case ShapeTag::other:
      return "other";
  }
  return "other";
}

ShapeTag shape_from_string(const std::string& s) {
  for (ShapeTag t : {ShapeTag::i, ShapeTag::ii, ShapeTag::iii, ShapeTag::iv, ShapeTag::v,
                     ShapeTag::defect_zero_singleton, ShapeTag::other})
    if (s == to_string(t)) return t;
  throw std::invalid_argument("unknown shape tag '" + s + "'");
}

bool verify_central(const Dataset& ds, const Word& word) {
  for (const auto& rep : ds.representations) {
    LpMatrix z = eval_word(rep, word);
    for (const auto& g : rep.matrices)
      if (z * g != g * z) return false;
  }
  return true;
}

LambdaTable lambda_table(const Dataset& ds, const Word& word) {
  LambdaTable t;
  t.word = word;
  for (size_t i = 0; i < ds.size(); ++i) {
    LpMatrix z = eval_word(ds.representations[i], word);
    const size_t n = z.rows();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        bool ok = a == b ? z(a, b) == z(0, 0) : z(a, b).is_zero();
        if (!ok) throw NonScalar(ds.label(i));
      }
    t.values.push_back(z(0, 0));
  }
  return t;
}

std::vector<std::vector<size_t>> lambda_partition(const Dataset& ds, const Specialization& spec,
                                                  const LambdaTable& table) {
  SpecReport sr = spec_report(ds, spec);
  std::vector<std::vector<size_t>> classes;
  std::vector<Cyclotomic> keys;
  for (size_t i = 0; i < ds.size(); ++i) {
    if (sr.defect_zero[i]) continue;
    Cyclotomic v = table.values[i].eval(spec.xi);
    size_t k = 0;
    while (k < keys.size() && keys[k] != v) ++k;
    if (k == keys.size()) {
      keys.push_back(v);
      classes.emplace_back();
    }
    classes[k].push_back(i);
  }
  return classes;
}

std::vector<std::vector<size_t>> lambda_partition(const Dataset& ds, const Specialization& spec,
                                                  const Word& word) {
  return lambda_partition(ds, spec, lambda_table(ds, word));
}

std::vector<std::vector<size_t>> connected_rows(const std::vector<std::vector<long>>& entries,
                                                std::vector<std::vector<size_t>>* columns) {
  const size_t nr = entries.size();
  const size_t nc = nr ? entries[0].size() : 0;
  // Union-find over rows followed by columns.
  std::vector<size_t> parent(nr + nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t r = 0; r < nr; ++r)
    for (size_t c = 0; c < nc; ++c)
      if (entries[r][c] != 0) {
        size_t a = find(r), b = find(nr + c);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<size_t, size_t> slot;
  std::vector<std::vector<size_t>> rows_out;
  std::vector<std::vector<size_t>> cols_out;
  for (size_t r = 0; r < nr; ++r) {
    size_t root = find(r);
    auto [it, fresh] = slot.try_emplace(root, rows_out.size());
    if (fresh) {
      rows_out.emplace_back();
      cols_out.emplace_back();
    }
    rows_out[it->second].push_back(r);
  }
  for (size_t c = 0; c < nc; ++c) {
    auto it = slot.find(find(nr + c));
    if (it != slot.end()) cols_out[it->second].push_back(c);
  }
  if (columns) *columns = std::move(cols_out);
  return rows_out;
}

std::vector<std::vector<long>> shape_pattern(ShapeTag t) {
  switch (t) {
    case ShapeTag::i:
      return {{1}, {1}};
    case ShapeTag::ii:
      return {{1, 0}, {1, 1}, {0, 1}};
    case ShapeTag::iii:
      return {{1, 0}, {1, 1}, {0, 1}, {1, 1}, {1, 0}};
    case ShapeTag::iv:
      return {{1, 0}, {0, 1}, {1, 1}, {0, 1}, {1, 0}};
    case ShapeTag::v:
      return {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    default:
      return {};
  }
}

namespace {

bool same_up_to_permutation(std::vector<std::vector<long>> a, const std::vector<std::vector<long>>& b) {
  if (a.size() != b.size() || a.empty() || a[0].size() != b[0].size()) return false;
  const size_t nc = a[0].size();
  std::vector<size_t> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<long>> sb = b;
  std::sort(sb.begin(), sb.end());
  do {
    std::vector<std::vector<long>> pa;
    for (const auto& row : a) {
      std::vector<long> r(nc);
      for (size_t j = 0; j < nc; ++j) r[j] = row[perm[j]];
      pa.push_back(std::move(r));
    }
    std::sort(pa.begin(), pa.end());
    if (pa == sb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

ShapeTag classify_shape(const std::vector<std::vector<long>>& block) {
  for (ShapeTag t : {ShapeTag::i, ShapeTag::ii, ShapeTag::iii, ShapeTag::iv, ShapeTag::v})
    if (same_up_to_permutation(block, shape_pattern(t))) return t;
  return ShapeTag::other;
}

BlockPartition block_partition(const DecompositionMatrix& dm) {
  BlockPartition bp;
  std::vector<std::vector<size_t>> cols;
  auto rows = connected_rows(dm.entries, &cols);
  for (size_t b = 0; b < rows.size(); ++b) {
    std::vector<size_t> labels;
    std::vector<std::vector<long>> sub;
    for (size_t r : rows[b]) {
      labels.push_back(dm.rows[r]);
      std::vector<long> line;
      for (size_t c : cols[b]) line.push_back(dm.entries[r][c]);
      sub.push_back(std::move(line));
    }
    ShapeTag tag = ShapeTag::other;
    if (rows[b].size() == 1 && cols[b].size() == 1 && dm.defect_zero[rows[b][0]])
      tag = ShapeTag::defect_zero_singleton;
    else if (!cols[b].empty())
      tag = classify_shape(sub);
    bp.blocks.push_back(std::move(labels));
    bp.columns.push_back(cols[b]);
    bp.shape_tags.push_back(tag);
  }
  return bp;
}

}  // namespace cyclohecke
