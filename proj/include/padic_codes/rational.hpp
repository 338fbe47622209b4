#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padic_codes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "a", "a/b", "+a/b" or "-a/b" with decimal digits. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) return fail();
  BigInt num(std::string(text.substr(pos, num_end - pos)));
  BigInt den = 1;
  if (num_end != text.size()) {
    if (text[num_end] != '/') return fail();
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) return fail();
    den = BigInt(std::string(text.substr(num_end + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

/// Canonical text form: "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const BigInt& z) { return z.str(); }

/// Largest integer not exceeding q.
inline BigInt floor_of(const Rational& q) {
  BigInt num = numerator_of(q);
  BigInt den = denominator_of(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

inline int sign_of(const Rational& q) { return q.sign(); }

}  // namespace padic_codes
