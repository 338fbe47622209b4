#pragma once

#include "padic_codes/valuation.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace padic_codes {

class PrimeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of Q_p, stored as an exact canonical rational.
class PAdicScalar {
 public:
  PAdicScalar(Rational value, Prime prime) : value_(std::move(value)), prime_(prime) {}

  const Rational& value() const { return value_; }
  const Prime& prime() const { return prime_; }

  ExtendedInt valuation() const { return padic_codes::valuation(value_, prime_); }
  PAdicAbs abs() const { return abs_p(value_, prime_); }

  friend PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b) {
    check(a, b);
    return PAdicScalar(a.value_ + b.value_, a.prime_);
  }
  friend PAdicScalar operator-(const PAdicScalar& a, const PAdicScalar& b) {
    check(a, b);
    return PAdicScalar(a.value_ - b.value_, a.prime_);
  }
  friend PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b) {
    check(a, b);
    return PAdicScalar(a.value_ * b.value_, a.prime_);
  }
  PAdicScalar operator-() const { return PAdicScalar(-value_, prime_); }

  friend bool operator==(const PAdicScalar&, const PAdicScalar&) = default;

 private:
  static void check(const PAdicScalar& a, const PAdicScalar& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch("scalars over different primes");
  }

  Rational value_;
  Prime prime_;
};

/// A vector of Q_p^d. Entries are kept as rationals sharing the vector's prime.
class PAdicVector {
 public:
  PAdicVector(Prime prime, std::vector<Rational> entries) : prime_(prime), entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("p-adic vector must have dimension >= 1");
  }
  PAdicVector(Prime prime, std::initializer_list<Rational> entries)
      : PAdicVector(prime, std::vector<Rational>(entries)) {}

  const Prime& prime() const { return prime_; }
  std::size_t dimension() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  PAdicScalar operator[](std::size_t j) const { return PAdicScalar(entries_.at(j), prime_); }

  friend PAdicVector operator+(const PAdicVector& a, const PAdicVector& b) {
    check_compatible(a, b);
    std::vector<Rational> out(a.dimension());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.entries_[j] + b.entries_[j];
    return PAdicVector(a.prime_, std::move(out));
  }
  friend PAdicVector operator-(const PAdicVector& a, const PAdicVector& b) {
    check_compatible(a, b);
    std::vector<Rational> out(a.dimension());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.entries_[j] - b.entries_[j];
    return PAdicVector(a.prime_, std::move(out));
  }
  friend PAdicVector operator*(const Rational& alpha, const PAdicVector& v) {
    std::vector<Rational> out(v.entries_);
    for (auto& x : out) x *= alpha;
    return PAdicVector(v.prime_, std::move(out));
  }

  friend bool operator==(const PAdicVector&, const PAdicVector&) = default;

  static void check_compatible(const PAdicVector& a, const PAdicVector& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch("vectors over different primes");
    if (a.dimension() != b.dimension()) {
      throw DimensionMismatch("vectors of dimension " + std::to_string(a.dimension()) + " and " +
                              std::to_string(b.dimension()));
    }
  }

 private:
  Prime prime_;
  std::vector<Rational> entries_;
};

/// Standard bilinear form sum_j u_j v_j on Q_p^d.
inline PAdicScalar padic_inner_product(const PAdicVector& u, const PAdicVector& v) {
  PAdicVector::check_compatible(u, v);
  Rational sum = 0;
  for (std::size_t j = 0; j < u.dimension(); ++j) sum += u.entries()[j] * v.entries()[j];
  return PAdicScalar(std::move(sum), u.prime());
}

/// max_j |v_j|_p
inline PAdicAbs sup_norm(const PAdicVector& v) {
  PAdicAbs best = PAdicAbs::zero(v.prime());
  for (const auto& x : v.entries()) best = std::max(best, abs_p(x, v.prime()));
  return best;
}

/// |<u,v>| <= ||u|| ||v||, decided on exponents.
inline bool cauchy_schwarz_holds(const PAdicVector& u, const PAdicVector& v) {
  return padic_inner_product(u, v).abs() <= sup_norm(u) * sup_norm(v);
}

}  // namespace padic_codes
