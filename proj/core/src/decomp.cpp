// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclohecke/basicsets.hpp"
#include "cyclohecke/blocks.hpp"

namespace cyclohecke {

std::vector<Word> words_up_to(size_t generators, int max_length) {
  std::vector<Word> out{Word{}};
  size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (size_t g = 0; g < generators; ++g) {
        Word w = out[i];
        w.push_back(static_cast<int>(g));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<CycVector> character_vectors(const std::vector<std::vector<CycMatrix>>& reps,
                                         const std::vector<Word>& words) {
  std::vector<CycVector> out;
  for (const auto& mats : reps) {
    const size_t n = mats.empty() ? 0 : mats[0].rows();
    std::map<Word, CycMatrix> prefix;
    CycVector row;
    row.reserve(words.size());
    for (const auto& w : words) {
      CycMatrix m;
      if (w.empty()) {
        m = CycMatrix::identity(n, Cyclotomic(1), Cyclotomic());
      } else {
        Word parent(w.begin(), w.end() - 1);
        auto it = prefix.find(parent);
        CycMatrix base = it != prefix.end() ? it->second
                                            : CycMatrix::identity(n, Cyclotomic(1), Cyclotomic());
        if (it == prefix.end())
          for (int g : parent) base = base * mats[g];
        m = base * mats[w.back()];
      }
      row.push_back(m.trace());
      prefix.emplace(w, std::move(m));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<std::vector<CycMatrix>> specialize_all(const Dataset& ds, const Cyclotomic& at) {
  std::vector<std::vector<CycMatrix>> out;
  for (const auto& rep : ds.representations) {
    std::vector<CycMatrix> mats;
    for (const auto& m : rep.matrices) mats.push_back(m.map([&](const LaurentPoly& p) { return p.eval(at); }));
    out.push_back(std::move(mats));
  }
  return out;
}

std::vector<std::vector<CycMatrix>> specialize_all(const Dataset& ds, const Specialization& spec) {
  std::vector<std::vector<CycMatrix>> out;
  for (const auto& rep : ds.representations) out.push_back(specialize_rep(rep, spec));
  return out;
}

size_t vectors_rank(const std::vector<CycVector>& rows) {
  if (rows.empty()) return 0;
  CycMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return rank(std::move(m));
}

// Incremental column echelon form over the label space.
class ColumnEchelon {
 public:
  bool add(CycVector v) {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const Cyclotomic f = v[pivots_[k]];
      if (f.is_zero()) continue;
      for (size_t i = 0; i < v.size(); ++i)
        if (!rows_[k][i].is_zero()) v[i] -= f * rows_[k][i];
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Cyclotomic iv = v[p].inv();
    for (auto& x : v)
      if (!x.is_zero()) x *= iv;
    for (auto& row : rows_) {
      const Cyclotomic f = row[p];
      if (f.is_zero()) continue;
      for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) row[i] -= f * v[i];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  size_t rank() const { return rows_.size(); }

 private:
  std::vector<CycVector> rows_;
  std::vector<size_t> pivots_;
};

struct WordScan {
  int length = 0;
  std::vector<size_t> rank_by_length;
  std::vector<Word> selected;        // words that raised the rank
  std::vector<CycVector> vectors;    // per representation, on the selected words
};

// Walks words by length with frontier products; stop(history) ends the walk
// after a length is complete.
template <class Stop>
WordScan scan_words(const std::vector<std::vector<CycMatrix>>& reps, size_t ngens, int cap, Stop&& stop) {
  WordScan scan;
  const size_t nr = reps.size();
  scan.vectors.assign(nr, {});
  ColumnEchelon ech;
  std::vector<Word> frontier{Word{}};
  std::vector<std::vector<CycMatrix>> prods(1);
  for (const auto& mats : reps) {
    const size_t n = mats.empty() ? 0 : mats[0].rows();
    prods[0].push_back(CycMatrix::identity(n, Cyclotomic(1), Cyclotomic()));
  }
  for (int len = 0;; ++len) {
    for (size_t w = 0; w < frontier.size(); ++w) {
      CycVector col;
      for (size_t r = 0; r < nr; ++r) col.push_back(prods[w][r].trace());
      if (ech.add(col)) {
        scan.selected.push_back(frontier[w]);
        for (size_t r = 0; r < nr; ++r) scan.vectors[r].push_back(col[r]);
      }
    }
    scan.length = len;
    scan.rank_by_length.push_back(ech.rank());
    if (stop(scan.rank_by_length) || len >= cap) return scan;
    std::vector<Word> next_words;
    std::vector<std::vector<CycMatrix>> next_prods;
    for (size_t w = 0; w < frontier.size(); ++w)
      for (size_t g = 0; g < ngens; ++g) {
        Word nw = frontier[w];
        nw.push_back(static_cast<int>(g));
        std::vector<CycMatrix> ps;
        for (size_t r = 0; r < nr; ++r) ps.push_back(prods[w][r] * reps[r][g]);
        next_words.push_back(std::move(nw));
        next_prods.push_back(std::move(ps));
      }
    frontier = std::move(next_words);
    prods = std::move(next_prods);
  }
}

}  // namespace

size_t generic_character_rank(const Dataset& ds, const std::vector<Word>& words) {
  size_t best = 0;
  for (long point : {2, 3, 5}) {
    auto reps = specialize_all(ds, Cyclotomic(point));
    best = std::max(best, vectors_rank(character_vectors(reps, words)));
    if (best == ds.size()) break;
  }
  return best;
}

WordBasis word_basis(const Dataset& ds, int cap) {
  const size_t ngens = ds.group.generators.size();
  const size_t n = ds.size();
  std::optional<int> found;
  for (long point : {2, 3, 5}) {
    const int limit = found ? *found - 1 : cap;
    if (limit < 0) break;
    auto scan = scan_words(specialize_all(ds, Cyclotomic(point)), ngens, limit,
                           [&](const std::vector<size_t>& h) { return h.back() == n; });
    if (scan.rank_by_length.back() == n) found = scan.length;
  }
  if (!found)
    throw WordBasisFailure("generic characters of " + ds.group.name +
                           " are not separated by words of length <= " + std::to_string(cap));
  return WordBasis{*found, words_up_to(ngens, *found)};
}

std::vector<CycVector> eigenspace(const CycMatrix& m, const Cyclotomic& lambda) {
  CycMatrix a = m;
  for (size_t i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
  return nullspace(a);
}

std::vector<InvariantLine> common_invariant_line(const std::vector<CycMatrix>& mats,
                                                 const std::vector<std::vector<Cyclotomic>>& allowed) {
  std::vector<InvariantLine> out;
  if (mats.empty()) return out;
  const size_t n = mats[0].rows();
  for (const auto& a : allowed)
    if (a.empty()) return out;
  std::vector<size_t> pick(mats.size(), 0);
  while (true) {
    CycMatrix stacked(n * mats.size(), n);
    CycVector lambdas;
    for (size_t k = 0; k < mats.size(); ++k) {
      const Cyclotomic& l = allowed[k][pick[k]];
      lambdas.push_back(l);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) stacked(k * n + i, j) = i == j ? mats[k](i, j) - l : mats[k](i, j);
    }
    for (auto& v : nullspace(stacked)) out.push_back(InvariantLine{std::move(v), lambdas});
    size_t k = mats.size();
    while (k > 0) {
      --k;
      if (++pick[k] < allowed[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

const char* to_string(NNStatus s) {
  switch (s) {
    case NNStatus::ok:
      return "ok";
    case NNStatus::dependent_basis:
      return "dependent_basis";
    case NNStatus::no_field_solution:
      return "no_field_solution";
    case NNStatus::non_integer:
      return "non_integer";
    case NNStatus::negative:
      return "negative";
  }
  return "unknown";
}

NNResult nnint_decompose(const CycVector& target, const std::vector<CycVector>& basis) {
  NNResult res;
  const size_t k = basis.size();
  const size_t len = target.size();
  CycMatrix aug(len, k + 1);
  for (size_t i = 0; i < len; ++i) {
    for (size_t j = 0; j < k; ++j) aug(i, j) = basis[j][i];
    aug(i, k) = target[i];
  }
  auto pivots = rref(aug);
  size_t basis_pivots = 0;
  bool target_pivot = false;
  for (size_t p : pivots) {
    if (p == k)
      target_pivot = true;
    else
      ++basis_pivots;
  }
  if (basis_pivots < k) {
    res.status = NNStatus::dependent_basis;
    return res;
  }
  if (target_pivot) {
    res.status = NNStatus::no_field_solution;
    return res;
  }
  res.status = NNStatus::ok;
  for (size_t j = 0; j < k; ++j) {
    const Cyclotomic& c = aug(j, k);
    if (!c.is_integer()) {
      res.status = NNStatus::non_integer;
      res.coeffs.clear();
      return res;
    }
    Integer v = c.is_zero() ? Integer(0) : Integer(c.rational().get_num());
    if (v < 0 && res.status == NNStatus::ok) res.status = NNStatus::negative;
    res.coeffs.push_back(v);
  }
  return res;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::irreducible:
      return "irreducible";
    case Verdict::reducible:
      return "reducible";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::none:
      return "none";
    case Reason::defect_zero:
      return "defect_zero";
    case Reason::dim_one:
      return "dim_one";
    case Reason::dim_two_no_invariant_line:
      return "dim_two_no_invariant_line";
    case Reason::search_hypothesis_verified:
      return "search_hypothesis_verified";
  }
  return "none";
}

size_t DecompositionMatrix::row_of(size_t label_index) const {
  for (size_t r = 0; r < rows.size(); ++r)
    if (rows[r] == label_index) return r;
  throw std::out_of_range("label index not among the rows");
}

std::optional<size_t> DecompositionMatrix::column_of(size_t label_index) const {
  for (size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == label_index) return c;
  return std::nullopt;
}

namespace {

struct Context {
  const Dataset& ds;
  const Specialization& spec;
  std::vector<CycVector> vectors;  // per label
  std::vector<bool> defect_zero;
  AValueTable av;
  std::vector<Cyclotomic> degree_values;  // D^P at xi, per label
  std::vector<LambdaTable> lambdas;
};

// Assembles entries for the candidate column lifts; empty optional on any
// N-decomposition failure.
std::optional<std::vector<std::vector<long>>> assemble(const Context& cx, const std::vector<size_t>& lifts) {
  std::vector<CycVector> basis;
  for (size_t l : lifts) basis.push_back(cx.vectors[l]);
  std::vector<std::vector<long>> entries;
  for (size_t i = 0; i < cx.ds.size(); ++i) {
    NNResult r = nnint_decompose(cx.vectors[i], basis);
    if (!r.ok()) return std::nullopt;
    std::vector<long> row;
    for (const auto& c : r.coeffs) row.push_back(c.get_si());
    entries.push_back(std::move(row));
  }
  return entries;
}

bool lambda_consistent(const Context& cx, const std::vector<std::vector<long>>& entries) {
  auto blocks = connected_rows(entries);
  for (const auto& table : cx.lambdas) {
    auto classes = lambda_partition(cx.ds, cx.spec, table);
    std::vector<long> cls(cx.ds.size(), -1);
    for (size_t k = 0; k < classes.size(); ++k)
      for (size_t i : classes[k]) cls[i] = static_cast<long>(k);
    for (const auto& b : blocks) {
      long seen = -2;
      for (size_t r : b) {
        if (cx.defect_zero[r]) continue;
        if (seen == -2) seen = cls[r];
        if (cls[r] != seen) return false;
      }
    }
  }
  return true;
}

bool hypothesis_accepted(const Context& cx, const std::vector<size_t>& lifts, bool use_lambda,
                         std::vector<std::vector<long>>* out) {
  auto entries = assemble(cx, lifts);
  if (!entries) return false;
  auto gr = lemma_gr_columns(*entries, cx.degree_values);
  if (!std::all_of(gr.begin(), gr.end(), [](bool b) { return b; })) return false;
  if (use_lambda && !lambda_consistent(cx, *entries)) return false;
  if (out) *out = std::move(*entries);
  return true;
}

// All k-subsets of pool, in lexicographic order of positions.
template <class F>
void for_each_subset(const std::vector<size_t>& pool, size_t k, F&& f) {
  if (k > pool.size()) return;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<size_t> pick;
    for (size_t i : idx) pick.push_back(pool[i]);
    f(pick);
    if (k == 0) return;
    size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DecompositionMatrix decomposition_matrix(const Dataset& ds, const Specialization& spec,
                                         const DecompOptions& opts) {
  DecompositionMatrix dm;
  dm.group = ds.group.name;
  dm.spec = spec;
  const size_t n = ds.size();
  dm.rows.resize(n);
  std::iota(dm.rows.begin(), dm.rows.end(), 0);
  SpecReport sr = spec_report(ds, spec);
  dm.defect_zero = sr.defect_zero;
  dm.certificates.assign(n, Certificate{});

  if (sr.semisimple) {
    dm.columns = dm.rows;
    dm.modular_rank = n;
    dm.entries.assign(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
      dm.entries[i][i] = 1;
      dm.certificates[i] = Certificate{Verdict::irreducible, Reason::defect_zero, std::nullopt, {}};
      dm.classes.push_back({i});
    }
    return dm;
  }

  Context cx{ds, spec, {}, sr.defect_zero, a_values(ds), {}, {}};
  const LaurentPoly P = opts.P ? *opts.P : lcm_P(ds);
  for (const auto& d : generic_degrees(ds, P)) cx.degree_values.push_back(d.eval(spec.xi));
  if (opts.use_lambda)
    for (const auto& w : ds.group.central_candidates)
      if (verify_central(ds, w)) cx.lambdas.push_back(lambda_table(ds, w));

  // Words by length until the specialized rank is stable over two further
  // lengths; characters are compared on the rank-raising words, which span
  // the column space of all words scanned.
  const auto reps = specialize_all(ds, spec);
  const size_t ngens = ds.group.generators.size();
  auto scan = scan_words(reps, ngens, opts.words_maxlen, [&](const std::vector<size_t>& h) {
    const size_t k = h.size();
    return h.back() == n || (k >= 3 && h[k - 1] == h[k - 3]);
  });
  cx.vectors = std::move(scan.vectors);
  dm.word_basis = WordBasis{scan.length, words_up_to(ngens, scan.length)};
  dm.modular_rank = scan.rank_by_length.back();
  const size_t rk = dm.modular_rank;

  // Classes of equal modular reduction, in data order of first member.
  std::vector<long> class_of(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    class_of[i] = static_cast<long>(dm.classes.size());
    std::vector<size_t> cls{i};
    for (size_t j = i + 1; j < n; ++j)
      if (class_of[j] < 0 && !sr.defect_zero[i] && !sr.defect_zero[j] && cx.vectors[j] == cx.vectors[i]) {
        class_of[j] = class_of[i];
        cls.push_back(j);
      }
    dm.classes.push_back(std::move(cls));
  }

  // Lift of a class: minimal a-value, then data order.
  auto lift_of = [&](const std::vector<size_t>& cls) {
    size_t best = cls[0];
    for (size_t m : cls)
      if (cx.av.values[m] < cx.av.values[best]) best = m;
    size_t ties = 0;
    for (size_t m : cls) ties += cx.av.values[m] == cx.av.values[best];
    if (ties > 1)
      dm.notes.push_back("a-value tie in the class of " + ds.label(best) + "; lift chosen by data order");
    return best;
  };

  const auto params = specialized_parameters(ds, spec);
  enum class State { irreducible, reducible_line, decomposed, open };
  std::vector<State> state(dm.classes.size(), State::open);
  std::vector<size_t> certified;  // lifts
  std::vector<std::optional<InvariantLine>> lines(dm.classes.size());
  for (size_t k = 0; k < dm.classes.size(); ++k) {
    const auto& cls = dm.classes[k];
    const size_t rep = cls[0];
    const int dim = ds.representations[rep].dim();
    if (sr.defect_zero[rep] || dim == 1) {
      state[k] = State::irreducible;
    } else if (dim == 2) {
      auto found = common_invariant_line(reps[rep], params);
      if (found.empty()) {
        state[k] = State::irreducible;
      } else {
        state[k] = State::reducible_line;
        lines[k] = found.front();
      }
    } else {
      auto found = common_invariant_line(reps[rep], params);
      if (!found.empty()) {
        state[k] = State::reducible_line;
        lines[k] = found.front();
      }
    }
    if (state[k] == State::irreducible) certified.push_back(lift_of(cls));
  }

  // Closure over the certified set.
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<CycVector> basis;
    for (size_t l : certified) basis.push_back(cx.vectors[l]);
    for (size_t k = 0; k < dm.classes.size(); ++k) {
      if (state[k] != State::open && state[k] != State::reducible_line) continue;
      NNResult r = nnint_decompose(cx.vectors[dm.classes[k][0]], basis);
      if (r.ok()) {
        state[k] = State::decomposed;
        progress = true;
      }
    }
  }

  // Hypothesis search over the remaining classes.
  std::vector<size_t> pool;
  for (size_t k = 0; k < dm.classes.size(); ++k)
    if (state[k] == State::open) pool.push_back(lift_of(dm.classes[k]));
  std::stable_sort(pool.begin(), pool.end(), [&](size_t a, size_t b) {
    int da = ds.representations[a].dim(), db = ds.representations[b].dim();
    if (da != db) return da < db;
    return cx.av.values[a] < cx.av.values[b];
  });
  std::vector<size_t> chosen;
  std::vector<std::vector<long>> entries;
  const size_t need = rk > certified.size() ? rk - certified.size() : 0;
  bool search_used = need > 0;
  if (!search_used) {
    auto e = assemble(cx, certified);
    if (e) {
      chosen = certified;
      entries = std::move(*e);
    } else {
      search_used = true;
    }
  }
  if (search_used) {
    std::vector<std::vector<size_t>> accepted;
    std::vector<std::vector<long>> first_entries;
    for_each_subset(pool, need, [&](const std::vector<size_t>& extra) {
      std::vector<size_t> lifts = certified;
      lifts.insert(lifts.end(), extra.begin(), extra.end());
      std::vector<std::vector<long>> e;
      if (hypothesis_accepted(cx, lifts, opts.use_lambda, accepted.empty() ? &e : nullptr)) {
        if (accepted.empty()) first_entries = std::move(e);
        accepted.push_back(extra);
      }
    });
    dm.candidates = accepted;
    if (accepted.empty()) {
      dm.determined = false;
      dm.notes.push_back("no hypothesis satisfies the N-decomposition, Lemma GR and lambda conditions");
      chosen = certified;
      auto e = assemble(cx, certified);
      if (!e) throw std::runtime_error("certified modular characters do not span the reductions");
      entries = std::move(*e);
    } else {
      dm.determined = accepted.size() == 1;
      if (!dm.determined)
        dm.notes.push_back(std::to_string(accepted.size()) + " hypotheses survive; the first is displayed");
      chosen = certified;
      chosen.insert(chosen.end(), accepted.front().begin(), accepted.front().end());
      entries = std::move(first_entries);
    }
  }

  // Column order: blocks by smallest row, then (a, data order) within a block.
  std::vector<std::vector<size_t>> block_cols;
  connected_rows(entries, &block_cols);
  std::vector<size_t> order;
  for (auto cols : block_cols) {
    std::sort(cols.begin(), cols.end(), [&](size_t x, size_t y) {
      size_t lx = chosen[x], ly = chosen[y];
      if (cx.av.values[lx] != cx.av.values[ly]) return cx.av.values[lx] < cx.av.values[ly];
      return lx < ly;
    });
    order.insert(order.end(), cols.begin(), cols.end());
  }
  for (size_t c : order) dm.columns.push_back(chosen[c]);
  dm.entries.assign(n, std::vector<long>(order.size(), 0));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < order.size(); ++c) dm.entries[r][c] = entries[r][order[c]];

  // Certificates.
  for (size_t k = 0; k < dm.classes.size(); ++k) {
    for (size_t i : dm.classes[k]) {
      Certificate& cert = dm.certificates[i];
      const int dim = ds.representations[i].dim();
      bool is_column = std::find(chosen.begin(), chosen.end(), lift_of(dm.classes[k])) != chosen.end();
      if (sr.defect_zero[i]) {
        cert = Certificate{Verdict::irreducible, Reason::defect_zero, std::nullopt, {}};
      } else if (state[k] == State::irreducible) {
        cert = Certificate{Verdict::irreducible, dim == 1 ? Reason::dim_one : Reason::dim_two_no_invariant_line,
                           std::nullopt, {}};
      } else if (state[k] == State::reducible_line) {
        cert = Certificate{Verdict::reducible, Reason::none, lines[k], dm.entries[i]};
      } else if (is_column) {
        cert = dm.determined && !dm.candidates.empty()
                   ? Certificate{Verdict::irreducible, Reason::search_hypothesis_verified, std::nullopt, {}}
                   : Certificate{Verdict::undetermined, Reason::none, std::nullopt, {}};
      } else if (state[k] == State::decomposed || dm.determined) {
        cert = Certificate{Verdict::reducible, Reason::none, std::nullopt, dm.entries[i]};
      } else {
        cert = Certificate{Verdict::undetermined, Reason::none, std::nullopt, {}};
      }
    }
  }
  return dm;
}

bool reverify_certificate(const Dataset& ds, const DecompositionMatrix& dm, size_t row) {
  const Certificate& cert = dm.certificates.at(row);
  if (cert.verdict != Verdict::reducible) return false;
  const size_t label = dm.rows[row];
  const auto mats = specialize_rep(ds.representations[label], dm.spec);
  if (cert.line) {
    const auto params = specialized_parameters(ds, dm.spec);
    const CycVector& v = cert.line->vector;
    if (std::all_of(v.begin(), v.end(), [](const Cyclotomic& x) { return x.is_zero(); })) return false;
    for (size_t g = 0; g < mats.size(); ++g) {
      const Cyclotomic& l = cert.line->eigenvalues[g];
      if (std::find(params[g].begin(), params[g].end(), l) == params[g].end()) return false;
      for (size_t i = 0; i < v.size(); ++i) {
        Cyclotomic s;
        for (size_t j = 0; j < v.size(); ++j) s += mats[g](i, j) * v[j];
        if (s != l * v[i]) return false;
      }
    }
    return true;
  }
  if (cert.row.size() != dm.columns.size()) return false;
  long nonzero = 0;
  for (long d : cert.row) {
    if (d < 0) return false;
    nonzero += d;
  }
  if (nonzero < 2) return false;
  std::vector<std::vector<CycMatrix>> reps{mats};
  for (size_t l : dm.columns) reps.push_back(specialize_rep(ds.representations[l], dm.spec));
  auto vecs = character_vectors(reps, dm.word_basis.words);
  for (size_t w = 0; w < dm.word_basis.words.size(); ++w) {
    Cyclotomic s;
    for (size_t c = 0; c < dm.columns.size(); ++c)
      if (cert.row[c] != 0) s += Cyclotomic(cert.row[c]) * vecs[c + 1][w];
    if (s != vecs[0][w]) return false;
  }
  return true;
}

}  // namespace cyclohecke
