#pragma once

#include "padic_codes/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padic_codes {

/// Polynomial with exact rational coefficients, lowest degree first. The zero polynomial has
/// no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial monomial(std::size_t k, const Rational& a = 1) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(i));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    std::vector<Rational> r = a.c_;
    for (std::size_t i = q.size(); i-- > 0;) {
      Rational f = r[i + b.c_.size() - 1] / b.c_.back();
      q[i] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial monic() const { return is_zero() ? *this : (1 / leading()) * *this; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ' ';
      out += to_string(c_[i]);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// P / gcd(P, P'): same distinct roots, all simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

/// Sturm sequence of a polynomial (meant for squarefree input).
inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p};
  if (p.is_zero()) return seq;
  seq.push_back(p.derivative());
  while (!seq.back().is_zero()) {
    seq.push_back(-divmod(seq[seq.size() - 2], seq.back()).second);
  }
  seq.pop_back();
  return seq;
}

inline std::size_t sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = s(x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

/// Number of distinct real roots in (lo, hi].
inline std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("the zero polynomial has infinitely many roots");
  if (hi <= lo) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

namespace polynomial_detail {

// P <= 0 on (lo, hi], given the Sturm sequence of P's squarefree part.
inline bool nonpositive_after(const Polynomial& p, const std::vector<Polynomial>& seq, const Rational& lo,
                              const Rational& hi) {
  const std::size_t roots = sign_changes(seq, lo) - sign_changes(seq, hi);
  if (roots == 0) return p(hi) < 0;
  // One root r in (lo, hi] and lo not a root: the sign on (lo, r) is that of P(lo).
  if (roots == 1 && p(lo) != 0) return p(lo) < 0 && p(hi) <= 0;
  const Rational mid = (lo + hi) / 2;
  return nonpositive_after(p, seq, lo, mid) && nonpositive_after(p, seq, mid, hi);
}

}  // namespace polynomial_detail

/// Exact decision of P(x) <= 0 for every x in [a, b].
inline bool nonpositive_on(const Polynomial& p, const Rational& a, const Rational& b) {
  if (b < a) throw std::invalid_argument("empty interval");
  if (p.is_zero()) return true;
  if (p(a) > 0) return false;
  if (a == b) return true;
  auto seq = sturm_sequence(squarefree_part(p));
  return polynomial_detail::nonpositive_after(p, seq, a, b);
}

}  // namespace padic_codes
