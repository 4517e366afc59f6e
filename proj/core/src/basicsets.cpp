// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/basicsets.hpp"

#include <algorithm>

namespace cyclohecke {

AValueTable a_values(const Dataset& ds) {
  AValueTable t;
  const long mu = ds.group.mu_order;
  for (const auto& s : ds.schur) {
    long v = substitute_power(s, mu).valuation();
    t.values.emplace_back(Integer(v), Integer(mu));
    t.values.back().canonicalize();
  }
  return t;
}

LaurentPoly lcm_P(const Dataset& ds) {
  if (ds.schur.empty()) return LaurentPoly::constant(Cyclotomic(1), Var::q);
  LaurentPoly p = ds.schur[0];
  for (size_t i = 1; i < ds.schur.size(); ++i) p = poly_lcm(p, ds.schur[i]);
  return poly_lcm(p, p);
}

LaurentPoly poincare_P(const Dataset& ds) {
  if (!ds.group.poincare_label) throw std::invalid_argument(ds.group.name + " marks no Poincare label");
  return ds.schur[ds.index_of(*ds.group.poincare_label)];
}

std::vector<LaurentPoly> generic_degrees(const Dataset& ds, const LaurentPoly& P) {
  std::vector<LaurentPoly> out;
  for (size_t i = 0; i < ds.size(); ++i) {
    try {
      out.push_back(P.exact_div(ds.schur[i]));
    } catch (const InexactDivision& e) {
      throw InexactDivision("Schur element of " + ds.label(i) + " does not divide P; remainder " +
                            e.remainder());
    }
  }
  return out;
}

std::vector<bool> lemma_gr_columns(const std::vector<std::vector<long>>& entries,
                                   const std::vector<Cyclotomic>& values) {
  const size_t nc = entries.empty() ? 0 : entries[0].size();
  std::vector<bool> out;
  for (size_t c = 0; c < nc; ++c) {
    Cyclotomic sum;
    for (size_t r = 0; r < entries.size(); ++r)
      if (entries[r][c] != 0) sum += Cyclotomic(entries[r][c]) * values[r];
    out.push_back(sum.is_zero());
  }
  return out;
}

std::vector<bool> lemma_gr_check(const DecompositionMatrix& dm, const std::vector<LaurentPoly>& degrees,
                                 const Specialization& spec) {
  bool semisimple = std::all_of(dm.defect_zero.begin(), dm.defect_zero.end(), [](bool b) { return b; });
  if (semisimple) return std::vector<bool>(dm.columns.size(), true);
  std::vector<Cyclotomic> vals;
  for (size_t r : dm.rows) vals.push_back(degrees[r].eval(spec.xi));
  return lemma_gr_columns(dm.entries, vals);
}

namespace {

std::vector<size_t> sorted_members(std::vector<size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<BasicSet> canonical_basic_set(const DecompositionMatrix& dm, const AValueTable& av,
                                            std::vector<std::string>* notes) {
  BasicSet bs;
  for (size_t c = 0; c < dm.columns.size(); ++c) {
    std::optional<size_t> best;
    bool strict = true;
    for (size_t r = 0; r < dm.rows.size(); ++r) {
      if (dm.entries[r][c] == 0) continue;
      const Rational& a = av.values[dm.rows[r]];
      if (!best || a < av.values[dm.rows[*best]]) {
        best = r;
        strict = true;
      } else if (a == av.values[dm.rows[*best]]) {
        strict = false;
      }
    }
    if (!best || !strict || dm.entries[*best][c] != 1) {
      if (notes)
        notes->push_back("canonical: column " + std::to_string(c) +
                         " has no row of entry 1 with strictly minimal a-value");
      return std::nullopt;
    }
    bs.column_to_label.push_back(dm.rows[*best]);
  }
  bs.members = sorted_members(bs.column_to_label);
  if (std::adjacent_find(bs.members.begin(), bs.members.end()) != bs.members.end()) {
    if (notes) notes->push_back("canonical: the column map is not injective");
    return std::nullopt;
  }
  return bs;
}

std::optional<BasicSet> optimal_basic_set(const DecompositionMatrix& dm, const AValueTable& av,
                                          std::vector<std::string>* notes) {
  BasicSet bs;
  const size_t nc = dm.columns.size();
  for (size_t c = 0; c < nc; ++c) {
    std::optional<size_t> best;
    size_t ties = 0;
    for (size_t r = 0; r < dm.rows.size(); ++r) {
      bool unit = true;
      for (size_t k = 0; k < nc && unit; ++k) unit = dm.entries[r][k] == (k == c ? 1 : 0);
      if (!unit) continue;
      const Rational& a = av.values[dm.rows[r]];
      if (!best || a < av.values[dm.rows[*best]]) {
        best = r;
        ties = 0;
      } else if (a == av.values[dm.rows[*best]]) {
        ++ties;
      }
    }
    if (!best) {
      if (notes) notes->push_back("optimal: column " + std::to_string(c) + " has no unit row");
      return std::nullopt;
    }
    if (ties > 0 && notes)
      notes->push_back("optimal: column " + std::to_string(c) + " has " + std::to_string(ties + 1) +
                       " unit rows of minimal a-value; first in data order chosen");
    bs.column_to_label.push_back(dm.rows[*best]);
  }
  bs.members = sorted_members(bs.column_to_label);
  return bs;
}

BasicSetReport basic_set_report(const DecompositionMatrix& dm, const AValueTable& av) {
  BasicSetReport r;
  r.canonical = canonical_basic_set(dm, av, &r.notes);
  r.optimal = optimal_basic_set(dm, av, &r.notes);
  return r;
}

ConjectureReport conjecture_audit(const Dataset& ds, const DecompositionMatrix& dm,
                                  const Specialization& spec, const LaurentPoly& P) {
  ConjectureReport rep;
  const auto degrees = generic_degrees(ds, P);
  const long order_P = P.vanishing_order(spec.xi);
  for (size_t c = 0; c < dm.columns.size(); ++c) {
    LaurentPoly sum(Var::q);
    for (size_t r = 0; r < dm.rows.size(); ++r)
      if (dm.entries[r][c] != 0) sum += degrees[dm.rows[r]] * Cyclotomic(dm.entries[r][c]);
    Conj1Entry e;
    e.column = c;
    e.order_P = order_P;
    e.order_sum = sum.is_zero() ? -1 : sum.vanishing_order(spec.xi);
    e.pass = e.order_sum == order_P;
    rep.conj1_pass = rep.conj1_pass && e.pass;
    rep.conj1.push_back(e);
  }

  const AValueTable av = a_values(ds);
  const BlockPartition bp = block_partition(dm);
  for (const auto& members : bp.blocks) {
    Conj2Block b;
    b.members = members;
    b.chi_b = members[0];
    for (size_t m : members) {
      if (av.values[m] < av.values[b.chi_b]) {
        b.chi_b = m;
        b.tie = false;
      } else if (m != b.chi_b && av.values[m] == av.values[b.chi_b]) {
        b.tie = true;
      }
    }
    const LaurentPoly& sb = ds.schur[b.chi_b];
    const long kb = sb.vanishing_order(spec.xi);
    b.pass = true;
    for (size_t m : members) {
      Conj2Entry e;
      e.label = m;
      const LaurentPoly& sm = ds.schur[m];
      const long km = sm.vanishing_order(spec.xi);
      if (km == kb) {
        Cyclotomic num = sb.strip_root(spec.xi, kb).eval(spec.xi);
        Cyclotomic den = sm.strip_root(spec.xi, km).eval(spec.xi);
        e.ratio = num / den;
        e.real = e.ratio->is_real();
        e.rational = e.ratio->is_rational();
        if (e.real) e.sign = e.ratio->sign();
      }
      if (e.real && e.sign > 0) {
        b.b_plus.push_back(m);
        e.ell_mod2 = 0;
      } else if (e.real && e.sign < 0) {
        b.b_minus.push_back(m);
        e.ell_mod2 = 1;
      } else {
        b.pass = false;
      }
      b.entries.push_back(std::move(e));
    }
    rep.conj2_pass = rep.conj2_pass && b.pass;
    rep.conj2.push_back(std::move(b));
  }
  return rep;
}

}  // namespace cyclohecke
