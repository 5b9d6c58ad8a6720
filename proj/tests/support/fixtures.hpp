// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// Helpers shared by the unit, end-to-end and acceptance tests.

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reltrs/relalg.hpp"
#include "reltrs/rewrite.hpp"
#include "reltrs/syntax.hpp"

namespace reltrs::test {

inline Term T(const std::string& text) {
  static const Trs trs = arithmetic_trs();
  return parse_term(text, trs.signature, trs.variables);
}

inline std::set<std::string> strings(const std::set<Term>& ts) {
  std::set<std::string> out;
  for (const Term& t : ts) out.insert(t.to_string());
  return out;
}

inline std::set<std::string> strings(const std::vector<Term>& ts) {
  std::set<std::string> out;
  for (const Term& t : ts) out.insert(t.to_string());
  return out;
}

using Pairs = std::set<std::pair<std::string, std::string>>;

inline Pairs pairs_of(const Rel& r) {
  auto v = r.labelled_pairs();
  return {v.begin(), v.end()};
}

inline CarrierPtr numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Carrier::make(labels);
}

inline Rel rel_of(const CarrierPtr& c, const Pairs& ps) {
  std::vector<std::pair<std::string, std::string>> v(ps.begin(), ps.end());
  return from_labelled_pairs(c, v);
}

/// Reflexive-transitive closure by Floyd-Warshall on a boolean matrix.
inline Rel warshall_star(const Rel& a) {
  std::size_t n = a.n();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) m[i][j] |= a.test(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] |= m[k][j];
    }
  }
  Rel out(a.carrier());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j]) out.set(i, j);
    }
  }
  return out;
}

/// Terms reachable from t in zero or more sequential steps, by BFS.
inline std::set<Term> bfs_reducts(const Trs& trs, const Term& t) {
  std::set<Term> seen{t};
  std::vector<Term> todo{t};
  while (!todo.empty()) {
    Term u = todo.back();
    todo.pop_back();
    for (const Term& v : sequential_step(trs, u)) {
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return seen;
}

}  // namespace reltrs::test
