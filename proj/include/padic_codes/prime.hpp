#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic_codes {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases suffice below 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// A prime number, checked at construction.
class Prime {
 public:
  explicit Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) {
      throw std::invalid_argument(std::to_string(value) + " is not prime");
    }
  }

  std::uint64_t value() const { return value_; }
  bool is_odd() const { return value_ != 2; }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

inline std::string to_string(const Prime& p) { return std::to_string(p.value()); }

}  // namespace padic_codes
