#pragma once

#include "padic_codes/code.hpp"
#include "padic_codes/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace padic_codes {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationBudget {
  /// Upper bound on the residue enumeration size p^((level+1) d).
  std::uint64_t max_enumeration = 1'000'000;
  /// Upper bound on the vertex count (adjacency is quadratic in it).
  std::uint64_t max_vertices = 40'000;
};

using Residue = std::vector<std::uint64_t>;

/// Sphere points of (Z/M)^d, M = p^(level+1), joined when their product is not 1 mod M.
///
/// Vertices are sorted lexicographically by base-p digits, least significant digit first,
/// so vertices sharing a residue mod p^k are contiguous for every k.
struct ResidueSphereGraph {
  Prime prime;
  std::size_t dim;
  std::int64_t level;
  std::uint64_t modulus;
  std::vector<Residue> vertices;
  Graph graph;
};

namespace residue_detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, const char* what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw BudgetExceeded(std::string(what) + " exceeds the configured budget of " +
                                             std::to_string(cap));
    r *= base;
  }
  return r;
}

inline std::uint64_t dot_mod(const Residue& x, const Residue& y, std::uint64_t m) {
  unsigned __int128 s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<unsigned __int128>(x[j]) * y[j];
  return static_cast<std::uint64_t>(s % m);
}

inline bool digit_less(const Residue& a, const Residue& b, std::uint64_t p, std::uint64_t modulus) {
  for (std::uint64_t q = 1; q < modulus; q *= p) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      std::uint64_t da = (a[j] / q) % p;
      std::uint64_t db = (b[j] / q) % p;
      if (da != db) return da < db;
    }
  }
  return false;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a modulo m; a must be a unit.
inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("element is not invertible");
  return mod_floor(old_s, m);
}

}  // namespace residue_detail

inline ResidueSphereGraph build_residue_graph(const Prime& p, std::size_t d, std::int64_t level,
                                              const EnumerationBudget& budget = {}) {
  using namespace residue_detail;
  if (!p.is_odd()) throw std::invalid_argument("residue sphere graphs need an odd prime");
  if (d == 0) throw std::invalid_argument("dimension must be >= 1");
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  const std::uint64_t modulus =
      checked_pow(p.value(), static_cast<std::uint64_t>(level) + 1, budget.max_enumeration, "modulus");
  const std::uint64_t total = checked_pow(modulus, d, budget.max_enumeration, "residue enumeration");

  std::vector<Residue> vertices;
  Residue x(d, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t t = c;
    for (std::size_t j = d; j-- > 0;) {
      x[j] = t % modulus;
      t /= modulus;
    }
    if (dot_mod(x, x, modulus) == 1 % modulus) {
      if (vertices.size() >= budget.max_vertices) {
        throw BudgetExceeded("vertex count exceeds the configured budget of " +
                             std::to_string(budget.max_vertices));
      }
      vertices.push_back(x);
    }
  }
  std::sort(vertices.begin(), vertices.end(), [&](const Residue& a, const Residue& b) {
    return digit_less(a, b, p.value(), modulus);
  });

  Graph graph(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (dot_mod(vertices[i], vertices[j], modulus) != 1 % modulus) graph.add_edge(i, j);
    }
  }
  return ResidueSphereGraph{p, d, level, modulus, std::move(vertices), std::move(graph)};
}

/// Lifts a solution of sum x_j^2 = 1 (mod p^from) to one modulo p^to by Newton steps on the
/// first coordinate that is a unit, leaving the others untouched. Entries come back in [0, p^to).
inline std::vector<BigInt> hensel_lift(const std::vector<BigInt>& x, const Prime& p, std::int64_t from,
                                       std::int64_t to) {
  using namespace residue_detail;
  if (!p.is_odd()) throw std::invalid_argument("hensel_lift needs an odd prime");
  if (from < 1 || to < from) throw std::invalid_argument("hensel_lift needs 1 <= from <= to");
  const BigInt P(p.value());
  const BigInt mod_from = boost::multiprecision::pow(P, static_cast<unsigned>(from));
  const BigInt mod_to = boost::multiprecision::pow(P, static_cast<unsigned>(to));

  BigInt norm = 0;
  for (const auto& v : x) norm += v * v;
  if (mod_floor(norm - 1, mod_from) != 0) {
    throw std::invalid_argument("hensel_lift: input is not on the sphere modulo p^" + std::to_string(from));
  }
  auto unit = std::find_if(x.begin(), x.end(), [&](const BigInt& v) { return mod_floor(v, P) != 0; });
  if (unit == x.end()) throw std::invalid_argument("hensel_lift: no coordinate is a p-adic unit");
  const std::size_t j = static_cast<std::size_t>(unit - x.begin());

  std::vector<BigInt> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = mod_floor(x[i], mod_to);
  BigInt target = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i != j) target -= y[i] * y[i];
  }
  target = mod_floor(target, mod_to);
  // f(t) = t^2 - target, f'(t) = 2t is a unit; each step doubles the precision.
  BigInt t = y[j];
  while (mod_floor(t * t - target, mod_to) != 0) {
    t = mod_floor(t - (t * t - target) * inverse_mod(2 * t, mod_to), mod_to);
  }
  y[j] = t;
  return y;
}

/// A rational point of the unit sphere (exact <t,t> = 1) with p-integral entries that reduces
/// to the residue x modulo `modulus`. Uses stereographic projection from -s e_i, choosing the
/// first coordinate i and sign s with 1 + s x_i a unit.
inline std::vector<Rational> exact_sphere_point(const Residue& x, const Prime& p, std::uint64_t modulus) {
  using namespace residue_detail;
  if (!p.is_odd()) throw std::invalid_argument("exact_sphere_point needs an odd prime");
  const BigInt M(modulus), P(p.value());
  const std::size_t d = x.size();
  std::size_t axis = d;
  int sign = 1;
  for (std::size_t i = 0; i < d && axis == d; ++i) {
    if (mod_floor(BigInt(1) + x[i], P) != 0) axis = i;
  }
  if (axis == d) {
    // Every coordinate is -1 mod p, so 1 - x_0 = 2 is a unit.
    axis = 0;
    sign = -1;
  }
  const BigInt denom_inv = inverse_mod(BigInt(1) + sign * BigInt(x[axis]), M);
  BigInt s = 0;
  std::vector<BigInt> u(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == axis) continue;
    u[j] = mod_floor(BigInt(x[j]) * denom_inv, M);
    s += u[j] * u[j];
  }
  std::vector<Rational> point(d);
  for (std::size_t j = 0; j < d; ++j) {
    point[j] = j == axis ? Rational(sign * (BigInt(1) - s), BigInt(1) + s) : Rational(2 * u[j], BigInt(1) + s);
  }
  return point;
}

enum class LiftMode { exact_rational, hensel };

/// Turns a clique of the residue graph into a code over Q_p^d.
///
/// exact_rational: every vertex becomes an exact rational sphere point congruent to it, so all
/// three conditions hold exactly. hensel: every vertex is Hensel-lifted to p^precision and read
/// as an integer vector; <t,t> = 1 then holds modulo p^precision and the code records that.
inline PAdicCode lift_clique_to_code(const ResidueSphereGraph& g, const std::vector<std::size_t>& clique,
                                     const SeparationSpec& spec, LiftMode mode = LiftMode::exact_rational,
                                     std::int64_t precision = 6) {
  if (clique.empty()) throw std::invalid_argument("cannot lift an empty clique");
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      if (!g.graph.adjacent(clique[a], clique[b])) throw std::invalid_argument("witness is not a clique");
    }
  }
  std::vector<PAdicVector> vectors;
  vectors.reserve(clique.size());
  for (std::size_t v : clique) {
    const Residue& x = g.vertices.at(v);
    if (mode == LiftMode::exact_rational) {
      vectors.emplace_back(g.prime, exact_sphere_point(x, g.prime, g.modulus));
    } else {
      if (precision < g.level + 1) throw std::invalid_argument("Hensel precision below the graph modulus");
      std::vector<BigInt> start(x.begin(), x.end());
      auto lifted = hensel_lift(start, g.prime, g.level + 1, precision);
      vectors.emplace_back(g.prime, std::vector<Rational>(lifted.begin(), lifted.end()));
    }
  }
  std::optional<std::int64_t> self_precision;
  if (mode == LiftMode::hensel) self_precision = precision;
  return PAdicCode(g.prime, g.dim, std::move(vectors), spec, CodeVariant{}, self_precision);
}

}  // namespace padic_codes
