#pragma once

#include "padic_codes/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace padic_codes {

struct CliqueResult {
  std::size_t size = 0;
  /// Sorted vertex indices; the lexicographically least maximum clique.
  std::vector<std::size_t> witness;
  /// Search-tree nodes over both phases. Depends on scheduling when threads > 1.
  std::uint64_t node_count = 0;
};

namespace clique_detail {

struct Colouring {
  std::vector<std::size_t> order;
  std::vector<std::size_t> colour;
};

// Greedy sequential colouring: colour classes are grown in vertex index order.
inline void colour(const Graph& g, Bitset candidates, Colouring& out) {
  out.order.clear();
  out.colour.clear();
  std::size_t k = 0;
  while (candidates.any()) {
    ++k;
    Bitset q = candidates;
    for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
      candidates.reset(v);
      out.order.push_back(v);
      out.colour.push_back(k);
      q.subtract(g.neighbours(v));
    }
  }
}

inline std::size_t colour_count(const Graph& g, Bitset candidates) {
  std::size_t k = 0;
  while (candidates.any()) {
    ++k;
    Bitset q = candidates;
    for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
      candidates.reset(v);
      q.subtract(g.neighbours(v));
    }
  }
  return k;
}

inline void raise_to(std::atomic<std::size_t>& best, std::size_t value) {
  std::size_t current = best.load();
  while (value > current && !best.compare_exchange_weak(current, value)) {
  }
}

class BoundSearch {
 public:
  BoundSearch(const Graph& g, std::atomic<std::size_t>& best, std::atomic<std::uint64_t>& nodes)
      : g_(g), best_(best), nodes_(nodes) {}

  void expand(std::size_t depth, Bitset candidates) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    Colouring c;
    colour(g_, candidates, c);
    for (std::size_t i = c.order.size(); i-- > 0;) {
      if (depth + c.colour[i] <= best_.load()) return;
      std::size_t v = c.order[i];
      Bitset next = candidates & g_.neighbours(v);
      if (next.any()) {
        expand(depth + 1, std::move(next));
      } else {
        raise_to(best_, depth + 1);
      }
      candidates.reset(v);
    }
  }

 private:
  const Graph& g_;
  std::atomic<std::size_t>& best_;
  std::atomic<std::uint64_t>& nodes_;
};

// Depth-first search in increasing vertex order for a clique of exactly `target` vertices;
// the first one reached is the lexicographically least.
inline bool lex_first(const Graph& g, std::vector<std::size_t>& clique, const Bitset& candidates,
                      std::size_t target, std::uint64_t& nodes) {
  ++nodes;
  if (clique.size() == target) return true;
  if (clique.size() + candidates.count() < target) return false;
  if (clique.size() + colour_count(g, candidates) < target) return false;
  for (std::size_t v = candidates.first(); v < candidates.size(); v = candidates.next(v + 1)) {
    Bitset next = candidates & g.neighbours(v);
    next.clear_through(v);
    clique.push_back(v);
    if (lex_first(g, clique, next, target, nodes)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace clique_detail

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
///
/// The clique number is found first (root branches optionally spread over `threads` workers
/// sharing a monotone best-size bound), then the witness is extracted sequentially as the
/// lexicographically least clique of that size, so the result does not depend on scheduling.
inline CliqueResult max_clique(const Graph& g, unsigned threads = 1) {
  using namespace clique_detail;
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("max_clique on an empty graph");

  std::atomic<std::size_t> best{1};
  std::atomic<std::uint64_t> nodes{1};
  Bitset all(n);
  all.set_all();
  Colouring root;
  colour(g, all, root);

  std::atomic<std::size_t> next_branch{0};
  auto worker = [&] {
    BoundSearch search(g, best, nodes);
    for (;;) {
      std::size_t j = next_branch.fetch_add(1);
      if (j >= n) return;
      std::size_t i = n - 1 - j;
      if (1 + root.colour[i] <= best.load()) continue;
      Bitset candidates(n);
      for (std::size_t t = 0; t < i; ++t) candidates.set(root.order[t]);
      candidates &= g.neighbours(root.order[i]);
      if (candidates.any()) {
        search.expand(1, std::move(candidates));
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CliqueResult result;
  result.size = best.load();
  std::uint64_t witness_nodes = 0;
  if (!lex_first(g, result.witness, all, result.size, witness_nodes)) {
    throw std::logic_error("max_clique: no clique of the computed size during witness extraction");
  }
  result.node_count = nodes.load() + witness_nodes;
  return result;
}

}  // namespace padic_codes
