#pragma once

#include "padic_codes/code.hpp"
#include "padic_codes/max_clique.hpp"
#include "padic_codes/residue_graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace padic_codes {

class UnsupportedPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
  EnumerationBudget budget;
  unsigned threads = 1;
  LiftMode witness_mode = LiftMode::exact_rational;
  /// Hensel precision K' for LiftMode::hensel.
  std::int64_t precision = 6;
  /// p = 2 only: stereographic parameters range over [0, 2^(level + depth)).
  std::int64_t two_adic_depth = 3;
};

struct SearchResult {
  Prime prime;
  std::size_t dim;
  Level level;
  std::uint64_t modulus = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_code_size = 0;
  /// false for the p = 2 mode, whose size is only a lower bound.
  bool exact = true;
  std::uint64_t nodes = 0;
  double millis = 0;
  PAdicCode witness;
};

namespace search_detail {

inline PAdicCode singleton_code(const Prime& p, std::size_t d, const SeparationSpec& spec) {
  std::vector<Rational> e1(d, Rational(0));
  e1[0] = 1;
  return PAdicCode(p, d, {PAdicVector(p, std::move(e1))}, spec);
}

// Candidate exact sphere points for p = 2: stereographic images of u in [0, 2^K)^(d-1) from the
// pole -e_1, kept when 2-integral, plus the coordinate vectors and their negatives.
inline std::vector<PAdicVector> two_adic_candidates(const Prime& p, std::size_t d, std::int64_t depth,
                                                    const EnumerationBudget& budget) {
  std::set<std::vector<Rational>> points;
  for (std::size_t i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> e(d, Rational(0));
      e[i] = s;
      points.insert(e);
    }
  }
  if (d >= 2) {
    const std::uint64_t side = residue_detail::checked_pow(2, static_cast<std::uint64_t>(depth),
                                                           budget.max_enumeration, "2-adic enumeration");
    const std::uint64_t total =
        residue_detail::checked_pow(side, d - 1, budget.max_enumeration, "2-adic enumeration");
    std::vector<BigInt> u(d - 1);
    for (std::uint64_t c = 0; c < total; ++c) {
      std::uint64_t t = c;
      BigInt s = 0;
      for (auto& x : u) {
        x = t % side;
        t /= side;
        s += x * x;
      }
      if (s % 2 != 0) continue;  // 1 + s must be odd for 2-integral entries
      std::vector<Rational> point(d);
      point[0] = Rational(BigInt(1) - s, BigInt(1) + s);
      for (std::size_t j = 1; j < d; ++j) point[j] = Rational(2 * u[j - 1], BigInt(1) + s);
      points.insert(std::move(point));
      if (points.size() > budget.max_vertices) throw BudgetExceeded("2-adic candidate set exceeds the vertex budget");
    }
  }
  std::vector<PAdicVector> out;
  for (const auto& pt : points) {
    PAdicVector v(p, pt);
    if (sup_norm(v) == PAdicAbs::one(p)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace search_detail

/// Exact maximum code size in Q_p^d for odd p (clique search on the residue sphere graph at
/// the effective level), with a witness code. For p = 2 an enumerate-and-validate search over
/// explicit exact sphere points yields a lower bound only (exact = false).
inline SearchResult search_max_code(const Prime& p, std::size_t d, const SeparationSpec& spec,
                                    const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  Level level = effective_level(spec, p);
  if (level.kind() == Level::Kind::unbounded) {
    throw std::domain_error("separation b = 0 admits every pair of distinct vectors; the code size is unbounded");
  }
  auto finish = [&](SearchResult r) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  if (level.kind() == Level::Kind::infeasible) {
    return finish(SearchResult{p, d, level, 0, 0, 0, 1, true, 0, 0, search_detail::singleton_code(p, d, spec)});
  }

  if (!p.is_odd()) {
    auto candidates = search_detail::two_adic_candidates(p, d, level.value() + options.two_adic_depth, options.budget);
    Graph g(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (spec.meets_bound(abs_p(pair_argument(candidates[i], candidates[j]), p)) == Verdict::holds) {
          g.add_edge(i, j);
        }
      }
    }
    CliqueResult clique = max_clique(g, options.threads);
    std::vector<PAdicVector> vectors;
    for (std::size_t v : clique.witness) vectors.push_back(candidates[v]);
    PAdicCode code(p, d, std::move(vectors), spec);
    return finish(SearchResult{p, d, level, 0, candidates.size(), g.edge_count(), clique.size, false,
                               clique.node_count, 0, std::move(code)});
  }

  ResidueSphereGraph g = build_residue_graph(p, d, level.value(), options.budget);
  CliqueResult clique = max_clique(g.graph, options.threads);
  PAdicCode code = lift_clique_to_code(g, clique.witness, spec, options.witness_mode,
                                       std::max<std::int64_t>(options.precision, level.value() + 1));
  return finish(SearchResult{p, d, level, g.modulus, g.vertices.size(), g.graph.edge_count(), clique.size, true,
                             clique.node_count, 0, std::move(code)});
}

/// Maximum code size at theta = pi/3 (b = 1, level 0).
inline CliqueResult kissing_number(const Prime& p, std::size_t d, unsigned threads = 1,
                                   const EnumerationBudget& budget = {}) {
  if (!p.is_odd()) throw UnsupportedPrime("the exact kissing-number solver does not handle p = 2");
  ResidueSphereGraph g = build_residue_graph(p, d, 0, budget);
  return max_clique(g.graph, threads);
}

inline std::string stats_tsv_header() { return "p\td\tlevel\tvertices\tedges\tclique\tnodes\tmillis"; }

inline std::string stats_tsv_row(const SearchResult& r) {
  std::ostringstream out;
  out << r.prime.value() << '\t' << r.dim << '\t' << r.level.str() << '\t' << r.vertices << '\t' << r.edges << '\t'
      << r.max_code_size << '\t' << r.nodes << '\t' << static_cast<std::uint64_t>(r.millis);
  return out.str();
}

}  // namespace padic_codes
