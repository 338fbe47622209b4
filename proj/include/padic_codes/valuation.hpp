#pragma once

#include "padic_codes/prime.hpp"
#include "padic_codes/rational.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padic_codes {

/// An integer or +infinity. Used as the codomain of v_p, with v_p(0) = +infinity.
class ExtendedInt {
 public:
  constexpr ExtendedInt(std::int64_t value) : value_(value), infinite_(false) {}  // NOLINT

  static constexpr ExtendedInt plus_infinity() { return ExtendedInt(); }

  constexpr bool is_infinite() const { return infinite_; }

  std::int64_t value() const {
    if (infinite_) throw std::logic_error("value() of +infinity");
    return value_;
  }

  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend constexpr ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_ || b.infinite_) return plus_infinity();
    return ExtendedInt(a.value_ + b.value_);
  }

  std::string str() const { return infinite_ ? "+inf" : std::to_string(value_); }

 private:
  constexpr ExtendedInt() : value_(0), infinite_(true) {}

  std::int64_t value_;
  bool infinite_;
};

namespace detail {

/// Strips factors of p from z (z != 0), returning the count.
inline std::int64_t strip_factor(BigInt& z, std::uint64_t p) {
  std::int64_t count = 0;
  BigInt q, r;
  for (;;) {
    boost::multiprecision::divide_qr(z, BigInt(p), q, r);
    if (r != 0) return count;
    z = q;
    ++count;
  }
}

inline BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace detail

/// v_p(q): the exponent e with q = p^e u/v and p dividing neither u nor v.
inline ExtendedInt valuation(const Rational& q, const Prime& p) {
  if (q == 0) return ExtendedInt::plus_infinity();
  BigInt num = numerator_of(q);
  BigInt den = denominator_of(q);
  std::int64_t up = detail::strip_factor(num, p.value());
  std::int64_t down = detail::strip_factor(den, p.value());
  return ExtendedInt(up - down);
}

/// |x|_p held symbolically as p^(-exponent); exponent +infinity encodes |0| = 0.
class PAdicAbs {
 public:
  PAdicAbs(Prime prime, ExtendedInt exponent) : prime_(prime), exponent_(exponent) {}

  static PAdicAbs zero(Prime prime) { return PAdicAbs(prime, ExtendedInt::plus_infinity()); }
  static PAdicAbs one(Prime prime) { return PAdicAbs(prime, 0); }

  const Prime& prime() const { return prime_; }
  const ExtendedInt& exponent() const { return exponent_; }
  bool is_zero() const { return exponent_.is_infinite(); }

  Rational to_rational() const {
    if (is_zero()) return Rational(0);
    std::int64_t e = exponent_.value();
    if (e >= 0) return Rational(BigInt(1), detail::ipow(prime_.value(), static_cast<std::uint64_t>(e)));
    return Rational(detail::ipow(prime_.value(), static_cast<std::uint64_t>(-e)));
  }

  /// Exact comparison of p^(-e) against a rational, by cross-multiplication in integers.
  std::strong_ordering compare(const Rational& bound) const {
    if (is_zero()) return 0 <=> bound.sign();
    if (bound.sign() <= 0) return std::strong_ordering::greater;
    BigInt num = numerator_of(bound);
    BigInt den = denominator_of(bound);
    std::int64_t e = exponent_.value();
    // p^(-e) vs num/den  <=>  den vs num * p^e   (e >= 0)
    //                    <=>  den * p^(-e) vs num (e < 0)
    if (e >= 0) return den.compare(num * detail::ipow(prime_.value(), static_cast<std::uint64_t>(e))) <=> 0;
    return BigInt(den * detail::ipow(prime_.value(), static_cast<std::uint64_t>(-e))).compare(num) <=> 0;
  }

  bool at_least(const Rational& bound) const { return compare(bound) >= 0; }

  friend PAdicAbs operator*(const PAdicAbs& a, const PAdicAbs& b) {
    check_same_prime(a, b);
    return PAdicAbs(a.prime_, a.exponent_ + b.exponent_);
  }

  /// Squares the value: p^(-2e).
  PAdicAbs squared() const { return *this * *this; }

  friend bool operator==(const PAdicAbs& a, const PAdicAbs& b) {
    return a.prime_ == b.prime_ && a.exponent_ == b.exponent_;
  }

  /// Real order of the values; the primes must agree.
  friend std::strong_ordering operator<=>(const PAdicAbs& a, const PAdicAbs& b) {
    check_same_prime(a, b);
    return b.exponent_ <=> a.exponent_;
  }

  /// "0" or "p^k" where the value is p^k (so k = -exponent).
  std::string str() const {
    if (is_zero()) return "0";
    return std::to_string(prime_.value()) + "^" + std::to_string(-exponent_.value());
  }

 private:
  static void check_same_prime(const PAdicAbs& a, const PAdicAbs& b) {
    if (a.prime_ != b.prime_) throw std::invalid_argument("p-adic absolute values over different primes");
  }

  Prime prime_;
  ExtendedInt exponent_;
};

inline PAdicAbs abs_p(const Rational& q, const Prime& p) { return PAdicAbs(p, valuation(q, p)); }

/// Parses "0" or "p^k" (value p^k); the base must equal `prime`.
inline PAdicAbs parse_padic_abs(std::string_view text, const Prime& prime) {
  if (text == "0") return PAdicAbs::zero(prime);
  auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    throw std::invalid_argument("expected 0 or p^k, got '" + std::string(text) + "'");
  }
  Rational base = parse_rational(text.substr(0, caret));
  Rational power = parse_rational(text.substr(caret + 1));
  if (denominator_of(base) != 1 || denominator_of(power) != 1) {
    throw std::invalid_argument("non-integer base or exponent in '" + std::string(text) + "'");
  }
  if (numerator_of(base) != BigInt(prime.value())) {
    throw std::invalid_argument("base of '" + std::string(text) + "' is not the prime " +
                                std::to_string(prime.value()));
  }
  BigInt k = numerator_of(power);
  if (k > BigInt(1) << 62 || k < -(BigInt(1) << 62)) {
    throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
  }
  return PAdicAbs(prime, -static_cast<std::int64_t>(k));
}

}  // namespace padic_codes
