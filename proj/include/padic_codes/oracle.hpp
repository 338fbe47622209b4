#pragma once

#include "padic_codes/code.hpp"
#include "padic_codes/residue_graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace padic_codes {

struct ExhaustiveResult {
  std::size_t size = 0;
  std::vector<Residue> witness;
};

namespace oracle_detail {

// Residues congruent mod p^ceil((m+1)/2) differ by a vector whose square norm vanishes mod
// p^(m+1), so each such class holds at most one member of an admissible set. The classes are
// checked against the admissibility matrix before they are used.
struct Enumeration {
  std::vector<Residue> points;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::vector<bool>> admissible;
};

inline Enumeration enumerate(const Prime& p, std::size_t d, std::int64_t level, const SeparationSpec& spec,
                             const EnumerationBudget& budget) {
  std::uint64_t modulus = 1;
  for (std::int64_t i = 0; i <= level; ++i) {
    if (modulus > budget.max_enumeration / p.value()) throw BudgetExceeded("modulus exceeds the budget");
    modulus *= p.value();
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > budget.max_enumeration / modulus) throw BudgetExceeded("residue enumeration exceeds the budget");
    total *= modulus;
  }

  Enumeration e;
  Residue x(d, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    // odometer, first coordinate most significant
    std::uint64_t t = c;
    for (std::size_t j = d; j-- > 0;) {
      x[j] = t % modulus;
      t /= modulus;
    }
    BigInt norm = 0;
    for (auto v : x) norm += BigInt(v) * v;
    if (norm % modulus == 1 % modulus) e.points.push_back(x);
  }
  if (e.points.size() > budget.max_vertices) throw BudgetExceeded("residue sphere exceeds the vertex budget");

  // Admissibility straight from the code definition: |2 - 2<x,y>|_p >= b on integer representatives.
  const std::size_t n = e.points.size();
  e.admissible.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BigInt dot = 0;
      for (std::size_t k = 0; k < d; ++k) dot += BigInt(e.points[i][k]) * e.points[j][k];
      bool ok = spec.meets_bound(abs_p(Rational(2 - 2 * dot), p)) == Verdict::holds;
      e.admissible[i][j] = e.admissible[j][i] = ok;
    }
  }

  std::uint64_t class_modulus = 1;
  for (std::int64_t i = 0; i < (level + 2) / 2; ++i) class_modulus *= p.value();
  std::vector<std::pair<Residue, std::size_t>> keyed;
  for (std::size_t i = 0; i < n; ++i) {
    Residue key(d);
    for (std::size_t k = 0; k < d; ++k) key[k] = e.points[i][k] % class_modulus;
    keyed.emplace_back(std::move(key), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) e.classes.emplace_back();
    e.classes.back().push_back(keyed[i].second);
  }
  for (const auto& cls : e.classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (e.admissible[cls[a]][cls[b]]) throw std::logic_error("oracle: residue class is not independent");
      }
    }
  }
  return e;
}

class SubsetSearch {
 public:
  explicit SubsetSearch(const Enumeration& e) : e_(e) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> chosen;
    visit(0, chosen);
    return best_;
  }

 private:
  bool compatible(std::size_t v, const std::vector<std::size_t>& chosen) const {
    for (std::size_t u : chosen) {
      if (!e_.admissible[u][v]) return false;
    }
    return true;
  }

  // Walks the classes in order, taking at most one member from each.
  void visit(std::size_t cls, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (cls == e_.classes.size()) return;
    std::size_t remaining = 0;
    for (std::size_t c = cls; c < e_.classes.size(); ++c) {
      for (std::size_t v : e_.classes[c]) {
        if (compatible(v, chosen)) {
          ++remaining;
          break;
        }
      }
    }
    if (chosen.size() + remaining <= best_.size()) return;
    for (std::size_t v : e_.classes[cls]) {
      if (!compatible(v, chosen)) continue;
      chosen.push_back(v);
      visit(cls + 1, chosen);
      chosen.pop_back();
    }
    visit(cls + 1, chosen);
  }

  const Enumeration& e_;
  std::vector<std::size_t> best_;
};

}  // namespace oracle_detail

/// Largest admissible set of residue sphere points, found by exhaustive subset search with
/// admissibility decided by exact p-adic absolute values. Shares nothing with max_clique;
/// intended as a test oracle for the clique reduction.
inline ExhaustiveResult exhaustive_max_code(const Prime& p, std::size_t d, const SeparationSpec& spec,
                                            const EnumerationBudget& budget = {}) {
  if (!p.is_odd()) throw std::invalid_argument("exhaustive_max_code needs an odd prime");
  Level level = effective_level(spec, p);
  if (level.kind() == Level::Kind::unbounded) throw std::domain_error("separation 0 admits unboundedly many vectors");
  if (level.kind() == Level::Kind::infeasible) {
    Residue e1(d, 0);
    e1[0] = 1;
    return ExhaustiveResult{1, {e1}};
  }
  auto e = oracle_detail::enumerate(p, d, level.value(), spec, budget);
  auto best = oracle_detail::SubsetSearch(e).run();
  ExhaustiveResult out;
  out.size = best.size();
  for (std::size_t i : best) out.witness.push_back(e.points[i]);
  return out;
}

}  // namespace padic_codes
