// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_SPECENG_HPP
#define CYCLOHECKE_SPECENG_HPP

#include <string>
#include <vector>

#include "cyclohecke/dataset.hpp"

namespace cyclohecke {

/// theta: y -> zeta, hence q -> xi = zeta^mu_order.
struct Specialization {
  RootOfUnity zeta;
  RootOfUnity xi;
  long mu_order = 1;

  /// Principal lift: xi = E(m)^k gives zeta = E(m*mu)^k.
  static Specialization from_q(const RootOfUnity& xi, long mu_order);
  std::string to_string() const;
};

/// "zetaN", "zetaN^k", "E(N)", "E(N)^k", "1", "-1", "i".
RootOfUnity parse_q_spec(const std::string& text);

struct SpecReport {
  Specialization spec;
  std::vector<Cyclotomic> schur_values;
  std::vector<bool> defect_zero;
  bool semisimple = true;
};

std::vector<long> critical_orders(const Dataset& ds);
std::vector<CycMatrix> specialize_rep(const Representation& rep, const Specialization& spec);
CycMatrix specialize_matrix(const LpMatrix& m, const Specialization& spec);
SpecReport spec_report(const Dataset& ds, const Specialization& spec);
/// Specialized parameter lists per generator, duplicates removed.
std::vector<std::vector<Cyclotomic>> specialized_parameters(const Dataset& ds,
                                                            const Specialization& spec);

}  // namespace cyclohecke

#endif
