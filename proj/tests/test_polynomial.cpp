#include <gtest/gtest.h>

#include "padic_codes/polynomial.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace padic_codes;

namespace {

struct Factored {
  Polynomial poly;
  std::set<Rational> roots;
};

// s * prod (x - r)^m, optionally times an irreducible x^2 + k.
Factored random_factored(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4), mult(1, 3), count(0, 4), coin(0, 1);
  Factored f{Polynomial::constant(coin(rng) ? 1 : -1), {}};
  if (coin(rng)) f.poly = Rational(num(rng) == 0 ? 2 : 3, den(rng)) * f.poly;
  for (int k = count(rng); k > 0; --k) {
    Rational r(num(rng), den(rng));
    f.roots.insert(r);
    for (int m = mult(rng); m > 0; --m) f.poly = f.poly * Polynomial{-r, 1};
  }
  if (coin(rng)) f.poly = f.poly * Polynomial{Rational(1 + den(rng)), 0, 1};
  return f;
}

// Between consecutive real roots the sign is constant, so sampling the endpoints, the roots
// and one point in each gap decides the question exactly.
bool nonpositive_oracle(const Factored& f, const Rational& a, const Rational& b) {
  std::vector<Rational> pts{a, b};
  for (const auto& r : f.roots) {
    if (a < r && r < b) pts.push_back(r);
  }
  std::sort(pts.begin(), pts.end());
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) pts.push_back((pts[i] + pts[i + 1]) / 2);
  return std::all_of(pts.begin(), pts.end(), [&](const Rational& x) { return f.poly(x) <= 0; });
}

}  // namespace

TEST(Polynomial, BasicArithmetic) {
  Polynomial p{1, 2, 3};  // 1 + 2x + 3x^2
  Polynomial q{0, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({1, 0, 0}).degree(), 0);
  EXPECT_EQ(p(Rational(2)), 17);
  EXPECT_EQ(p.derivative(), (Polynomial{2, 6}));
  EXPECT_EQ(p * q, (Polynomial{0, 1, 2, 3}));
  EXPECT_EQ(p - p, Polynomial());
  EXPECT_EQ(Rational(1, 3) * p, (Polynomial{Rational(1, 3), Rational(2, 3), 1}));
  EXPECT_EQ(Polynomial::monomial(3, 2), (Polynomial{0, 0, 0, 2}));
  EXPECT_EQ(p.coefficient(7), 0);
  EXPECT_EQ(p.leading(), 3);
  EXPECT_THROW(Polynomial().leading(), std::domain_error);
  EXPECT_EQ((Polynomial{Rational(-1, 2), 0, 1}).str(), "-1/2 0 1");
}

TEST(Polynomial, DivisionIdentity) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-9, 9), deg(0, 6);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> a(deg(rng) + 1), b(deg(rng) + 1);
    for (auto& x : a) x = Rational(c(rng), 1 + i % 3);
    for (auto& x : b) x = c(rng);
    Polynomial pa(a), pb(b);
    if (pb.is_zero()) {
      EXPECT_THROW(divmod(pa, pb), std::domain_error);
      continue;
    }
    auto [q, r] = divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(Polynomial, GcdAndSquarefreePart) {
  Polynomial a{-1, 1}, b{2, 1}, c{0, 0, 1, 0, 0};  // x - 1, x + 2, x^2
  EXPECT_EQ(gcd(a * a * b, a * c), a);
  EXPECT_EQ(squarefree_part(a * a * a * b * b).monic(), (a * b).monic());
  EXPECT_EQ(squarefree_part(Polynomial::constant(5)), Polynomial::constant(5));
}

TEST(Sturm, CountsKnownRoots) {
  Polynomial p = Polynomial{1, 1} * Polynomial{0, 1} * Polynomial{Rational(-1, 2), 1};  // roots -1, 0, 1/2
  EXPECT_EQ(count_roots(p, -2, 2), 3u);
  EXPECT_EQ(count_roots(p, -1, 1), 2u);   // (-1, 1] excludes -1
  EXPECT_EQ(count_roots(p, -2, -1), 1u);  // includes the right end
  EXPECT_EQ(count_roots(p, Rational(1, 10), Rational(2, 5)), 0u);
  EXPECT_EQ(count_roots(Polynomial{1, 0, 1}, -100, 100), 0u);
  EXPECT_EQ(count_roots(p, 1, -1), 0u);
  EXPECT_THROW(count_roots(Polynomial(), 0, 1), std::domain_error);
}

TEST(Sturm, CountsMatchConstructedRoots) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> end(-16, 16);
  for (int i = 0; i < 400; ++i) {
    auto f = random_factored(rng);
    Rational lo(end(rng), 4), hi(end(rng), 4);
    if (hi < lo) std::swap(lo, hi);
    auto expected = std::count_if(f.roots.begin(), f.roots.end(), [&](const Rational& r) { return lo < r && r <= hi; });
    EXPECT_EQ(count_roots(f.poly, lo, hi), static_cast<std::size_t>(expected)) << f.poly.str();
  }
}

TEST(NonpositiveOn, Examples) {
  Polynomial x{0, 1};
  EXPECT_TRUE(nonpositive_on(x, -1, 0));
  EXPECT_FALSE(nonpositive_on(x, -1, Rational(1, 1000)));
  Polynomial neg_square = -(Polynomial{Rational(-1, 3), 1} * Polynomial{Rational(-1, 3), 1});
  EXPECT_TRUE(nonpositive_on(neg_square, -5, 5));
  // Touches zero at 1/3 from below, then crosses at 1/2.
  EXPECT_FALSE(nonpositive_on(neg_square * Polynomial{Rational(1, 2), -1}, -1, 1));
  EXPECT_TRUE(nonpositive_on(neg_square * Polynomial{Rational(1, 2), -1}, -1, Rational(1, 2)));
  EXPECT_FALSE(nonpositive_on(neg_square * Polynomial{Rational(1, 2), -1}, Rational(1, 2), 1));
  EXPECT_TRUE(nonpositive_on(Polynomial(), -1, 1));
  EXPECT_TRUE(nonpositive_on(x, 0, 0));
  EXPECT_THROW(nonpositive_on(x, 1, 0), std::invalid_argument);
}

TEST(NonpositiveOn, MatchesGapSamplingOracle) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> end(-16, 16);
  int yes = 0, no = 0;
  for (int i = 0; i < 2000; ++i) {
    auto f = random_factored(rng);
    Rational a(end(rng), 4), b(end(rng), 4);
    if (b < a) std::swap(a, b);
    // Endpoints on roots exercise the boundary cases.
    if (i % 5 == 0 && !f.roots.empty()) a = std::min(*f.roots.begin(), b);
    const bool expected = nonpositive_oracle(f, a, b);
    EXPECT_EQ(nonpositive_on(f.poly, a, b), expected) << f.poly.str() << " on [" << a << ", " << b << "]";
    (expected ? yes : no)++;
  }
  EXPECT_GT(yes, 200);
  EXPECT_GT(no, 200);
}
