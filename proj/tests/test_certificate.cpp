#include <gtest/gtest.h>

#include "padic_codes/certificate_io.hpp"
#include "padic_codes/search.hpp"

#include <algorithm>
#include <fstream>
#include <random>

using namespace padic_codes;

namespace {

PAdicCode load(const std::string& name) {
  std::ifstream in(std::string(PADIC_DATA_DIR) + "/" + name);
  return read_code(in);
}

PfenderCertificate load_cert(const std::string& name, const Prime& p) {
  std::ifstream in(std::string(PADIC_DATA_DIR) + "/" + name);
  return read_certificate(in, p);
}

PhiTable table(const Prime& p, std::initializer_list<std::pair<std::optional<std::int64_t>, Rational>> entries) {
  PhiTable phi;
  for (const auto& [e, q] : entries) phi.emplace(e ? PAdicAbs(p, *e) : PAdicAbs::zero(p), q);
  return phi;
}

// Valid codes of several shapes: search witnesses, their prefixes, and greedy codes built
// from random stereographic sphere points.
const std::vector<PAdicCode>& code_pool() {
  static std::vector<PAdicCode> pool;
  if (!pool.empty()) return pool;
  for (std::uint64_t q : {3, 5, 7}) {
    for (std::size_t d : {1u, 2u, 3u}) {
      for (const Rational& cos : {Rational(1, 2), Rational(5, 6), Rational(-1, 2)}) {
        auto r = search_max_code(Prime(q), d, SeparationSpec::from_cos_theta(cos));
        const auto& v = r.witness.vectors();
        for (std::size_t k = 1; k <= v.size(); ++k) {
          pool.emplace_back(Prime(q), d, std::vector<PAdicVector>(v.begin(), v.begin() + k), r.witness.spec());
        }
      }
    }
  }
  std::mt19937_64 rng(31);
  for (std::uint64_t q : {3, 5}) {
    const Prime p(q);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> u(-20, 20);
      std::vector<PAdicVector> accepted;
      auto spec = SeparationSpec::from_cos_theta(trial % 2 ? Rational(1, 2) : Rational(17, 18));
      for (int attempt = 0; attempt < 60; ++attempt) {
        int a = u(rng), b = u(rng);
        BigInt s = a * a + b * b;
        if ((1 + s) % q == 0) continue;
        accepted.emplace_back(p, std::vector<Rational>{Rational(BigInt(1) - s, BigInt(1) + s), Rational(2 * a, BigInt(1) + s),
                                                       Rational(2 * b, BigInt(1) + s)});
        if (!validate_code(PAdicCode(p, 3, accepted, spec)).valid) accepted.pop_back();
      }
      pool.emplace_back(p, 3, accepted, spec);
    }
  }
  return pool;
}

}  // namespace

// =============================================================================
// Bound arithmetic
// =============================================================================

TEST(CertificateBound, Examples) {
  const Prime p(3);
  EXPECT_EQ(certificate_bound(PfenderCertificate(p, 1, table(p, {{std::nullopt, 3}}))), 4);
  EXPECT_EQ(certificate_bound(PfenderCertificate(p, Rational(1, 2), table(p, {{std::nullopt, 0}}))), 1);
  PfenderCertificate base(p, 1, table(p, {{std::nullopt, 3}, {0, -1}}));
  EXPECT_EQ(certificate_bound(base.scaled(Rational(7, 3))), 4);
  EXPECT_EQ(base.scaled(Rational(7, 3)).c(), Rational(7, 3));
}

TEST(PfenderCertificate, ConstructionChecks) {
  const Prime p(3);
  EXPECT_THROW(PfenderCertificate(p, 0, table(p, {{std::nullopt, 1}})), std::invalid_argument);
  EXPECT_THROW(PfenderCertificate(p, -1, table(p, {{std::nullopt, 1}})), std::invalid_argument);
  EXPECT_THROW(PfenderCertificate(p, 1, table(p, {{0, -1}})), std::invalid_argument);
  EXPECT_THROW(PfenderCertificate(p, 1, table(Prime(5), {{std::nullopt, 1}})), PrimeMismatch);
  EXPECT_THROW(PfenderCertificate(p, 1, table(p, {{std::nullopt, 1}}), DomainKind::finite, Rational(2)),
               std::invalid_argument);
  EXPECT_THROW(PfenderCertificate(p, 1, table(p, {{std::nullopt, 1}})).scaled(0), std::invalid_argument);
}

TEST(PfenderCertificate, IntervalFormIsAStepFunction) {
  const Prime p(3);
  PfenderCertificate cert(p, 1, table(p, {{std::nullopt, 3}, {1, 5}, {0, -1}}), DomainKind::interval);
  EXPECT_EQ(cert.evaluate(PAdicAbs::zero(p)), Rational(3));
  EXPECT_EQ(cert.evaluate(PAdicAbs(p, 4)), Rational(3));
  EXPECT_EQ(cert.evaluate(PAdicAbs(p, 1)), Rational(5));
  EXPECT_EQ(cert.evaluate(PAdicAbs(p, 0)), Rational(-1));
  EXPECT_EQ(cert.evaluate(PAdicAbs(p, -3)), Rational(-1));
  PfenderCertificate finite(p, 1, cert.phi());
  EXPECT_EQ(finite.evaluate(PAdicAbs(p, -3)), std::nullopt);
}

// =============================================================================
// Verification
// =============================================================================

TEST(VerifyCertificate, K4TrivialCertificate) {
  auto code = load("k4_p3.code");
  auto r = verify_certificate(code, load_cert("k4_trivial.cert", code.prime()));
  EXPECT_TRUE(r.hypotheses_ok);
  EXPECT_EQ(r.phi_sum, 0);
  ASSERT_TRUE(r.bound);
  EXPECT_EQ(*r.bound, 4);
  EXPECT_EQ(*r.implied_n_cap, 4);
  EXPECT_FALSE(r.special_case);
}

TEST(VerifyCertificate, K4WithSmallPhiZeroFailsTheSum) {
  auto code = load("k4_p3.code");
  auto r = verify_certificate(code, load_cert("k4_broken.cert", code.prime()));
  EXPECT_FALSE(r.hypotheses_ok);
  EXPECT_FALSE(r.sum_nonnegative);
  EXPECT_TRUE(r.negativity_holds);
  EXPECT_EQ(r.phi_sum, -4);
  EXPECT_FALSE(r.bound);
  EXPECT_FALSE(r.implied_n_cap);
}

TEST(VerifyCertificate, NegativityViolationsAreListed) {
  auto code = load("k4_p3.code");
  const Prime p = code.prime();
  auto r = verify_certificate(code, PfenderCertificate(p, 1, table(p, {{std::nullopt, 20}, {0, Rational(-1, 2)}})));
  EXPECT_TRUE(r.sum_nonnegative);
  EXPECT_FALSE(r.negativity_holds);
  ASSERT_EQ(r.negativity_violations.size(), 1u);
  EXPECT_EQ(r.negativity_violations[0].value, PAdicAbs::one(p));
  EXPECT_EQ(r.negativity_violations[0].excess, Rational(1, 2));
  EXPECT_FALSE(r.bound);
}

TEST(VerifyCertificate, IntervalFormChecksEveryStepFromTheThreshold) {
  auto code = load("k4_p3.code");
  const Prime p = code.prime();
  // The step starting at 1/3 contains b = 1; a later step at 3 is positive.
  PfenderCertificate bad(p, 1, table(p, {{std::nullopt, 3}, {1, -1}, {-1, 0}}), DomainKind::interval);
  auto r = verify_certificate(code, bad);
  EXPECT_FALSE(r.negativity_holds);
  ASSERT_EQ(r.negativity_violations.size(), 1u);
  EXPECT_EQ(r.negativity_violations[0].value, PAdicAbs(p, -1));

  PfenderCertificate good(p, 1, table(p, {{std::nullopt, 3}, {1, -1}, {-1, -2}}), DomainKind::interval);
  auto ok = verify_certificate(code, good);
  EXPECT_TRUE(ok.hypotheses_ok);
  EXPECT_EQ(*ok.bound, 4);

  // Read as a finite table the same values leave phi(1) undefined.
  EXPECT_THROW(verify_certificate(code, PfenderCertificate(p, 1, good.phi())), CertificateError);
}

TEST(VerifyCertificate, SpecialCaseCap) {
  auto code = load("k4_p3.code");
  const Prime p = code.prime();
  PfenderCertificate cert(p, Rational(1, 4), table(p, {{std::nullopt, Rational(3, 4)}, {0, Rational(-1, 4)}}));
  auto r = verify_certificate(code, cert);
  ASSERT_TRUE(r.hypotheses_ok);
  EXPECT_TRUE(r.special_case);
  EXPECT_EQ(*r.special_case_cap, 4);
  EXPECT_EQ(*r.bound, 4);
}

TEST(VerifyCertificate, ErrorConditions) {
  auto code = load("k4_p3.code");
  const Prime p = code.prime();
  EXPECT_THROW(verify_certificate(code, PfenderCertificate(p, 1, table(p, {{std::nullopt, 3}}))), CertificateError);
  EXPECT_THROW(verify_certificate(code, PfenderCertificate(Prime(5), 1, table(Prime(5), {{std::nullopt, 3}}))),
               CertificateError);
  PfenderCertificate mismatched(p, 1, table(p, {{std::nullopt, 3}, {0, -1}}), DomainKind::finite, Rational(0));
  EXPECT_THROW(verify_certificate(code, mismatched), CertificateError);
  PfenderCertificate matched(p, 1, mismatched.phi(), DomainKind::finite, Rational(1, 2));
  EXPECT_TRUE(verify_certificate(code, matched).hypotheses_ok);

  auto dup = load("duplicate_p3.code");
  EXPECT_THROW(verify_certificate(dup, PfenderCertificate(p, 1, table(p, {{std::nullopt, 3}, {0, -1}}))),
               InvalidCode);

  SearchOptions hensel;
  hensel.witness_mode = LiftMode::hensel;
  auto lifted = search_max_code(p, 2, SeparationSpec::kissing(), hensel).witness;
  ASSERT_TRUE(lifted.self_product_precision());
  EXPECT_THROW(verify_certificate(lifted, trivial_tight_certificate(lifted.size(), off_diagonal_value_multiset(lifted), p)),
               CertificateError);
}

// =============================================================================
// Trivial and synthesized certificates
// =============================================================================

TEST(TrivialCertificate, Examples) {
  const Prime p(3);
  ValueMultiset k4_values{{PAdicAbs::one(p), 12}};
  auto cert = trivial_tight_certificate(4, k4_values, p);
  EXPECT_EQ(cert.c(), 1);
  EXPECT_EQ(cert.phi(), table(p, {{std::nullopt, 3}, {0, -1}}));
  EXPECT_EQ(certificate_bound(cert), 4);
  auto single = trivial_tight_certificate(1, {}, p);
  EXPECT_EQ(single.phi(), table(p, {{std::nullopt, 0}}));
  EXPECT_EQ(certificate_bound(single), 1);
  EXPECT_THROW(trivial_tight_certificate(0, {}, p), std::invalid_argument);
}

TEST(SynthesizeCertificate, Examples) {
  const Prime p(3);
  auto k4 = synthesize_certificate_lp({{PAdicAbs::one(p), 12}}, 4, p);
  EXPECT_EQ(certificate_bound(k4), 4);
  EXPECT_EQ(k4.c(), 1);
  EXPECT_EQ(certificate_bound(synthesize_certificate_lp({}, 1, p)), 1);
  auto two = synthesize_certificate_lp({{PAdicAbs::one(p), 2}}, 2, p);
  EXPECT_EQ(two.phi_zero(), 1);
  EXPECT_EQ(certificate_bound(two), 2);
  // Two distinct off-diagonal values.
  auto mixed = synthesize_certificate_lp({{PAdicAbs::one(p), 4}, {PAdicAbs(p, -1), 2}}, 3, p);
  EXPECT_EQ(mixed.phi_zero(), 2);
}

TEST(SynthesizeCertificate, BoundEqualsSizeOnEveryCode) {
  for (const auto& code : code_pool()) {
    ASSERT_TRUE(validate_code(code).valid);
    const auto n = static_cast<std::int64_t>(code.size());
    auto lp = synthesize_certificate_lp(code);
    auto tight = trivial_tight_certificate(code.size(), off_diagonal_value_multiset(code), code.prime());
    for (const auto& cert : {lp, tight}) {
      auto r = verify_certificate(code, cert);
      ASSERT_TRUE(r.hypotheses_ok);
      EXPECT_EQ(*r.bound, n);
      EXPECT_EQ(*r.implied_n_cap, n);
    }
  }
}

// =============================================================================
// Properties
// =============================================================================

TEST(CertificateProperties, RandomCertificatesNeverContradictTheCodeSize) {
  const auto& pool = code_pool();
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> small(0, 12), num(1, 9), den(1, 4);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const auto& code = pool[trial % pool.size()];
    const Prime p = code.prime();
    const Rational c(num(rng), den(rng));
    PhiTable phi;
    phi.emplace(PAdicAbs::zero(p), Rational(small(rng) - 2, den(rng)) * code.size());
    for (const auto& [v, _] : off_diagonal_value_multiset(code)) {
      // Mostly admissible values, sometimes slightly above -c.
      phi.emplace(v, -c - Rational(small(rng) - 1, den(rng)));
    }
    auto r = verify_certificate(code, PfenderCertificate(p, c, phi));
    (r.hypotheses_ok ? accepted : rejected)++;
    if (r.hypotheses_ok) {
      EXPECT_LE(Rational(code.size()), *r.bound);
      EXPECT_EQ(*r.implied_n_cap, floor_of(*r.bound));
      EXPECT_EQ(r.special_case, phi.at(PAdicAbs::zero(p)) + c <= 1);
      if (r.special_case) {
        EXPECT_EQ(*r.special_case_cap, floor_of(1 / c));
        EXPECT_LE(floor_of(*r.bound), *r.special_case_cap);
      }
    }
  }
  EXPECT_GT(accepted, 500);
  EXPECT_GT(rejected, 500);
}

TEST(CertificateProperties, ScalingInvariance) {
  const auto& pool = code_pool();
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> small(-3, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& code = pool[trial % pool.size()];
    const Prime p = code.prime();
    PhiTable phi;
    phi.emplace(PAdicAbs::zero(p), Rational(small(rng) + static_cast<int>(code.size())));
    for (const auto& [v, _] : off_diagonal_value_multiset(code)) phi.emplace(v, Rational(-small(rng) - 3, 3));
    PfenderCertificate cert(p, 1, phi);
    auto base = verify_certificate(code, cert);
    for (const Rational& lambda : {Rational(1, 7), Rational(7, 3), Rational(22, 5)}) {
      auto s = verify_certificate(code, cert.scaled(lambda));
      EXPECT_EQ(s.hypotheses_ok, base.hypotheses_ok);
      EXPECT_EQ(s.sum_nonnegative, base.sum_nonnegative);
      EXPECT_EQ(s.negativity_holds, base.negativity_holds);
      EXPECT_EQ(s.bound, base.bound);
      EXPECT_EQ(certificate_bound(cert.scaled(lambda)), certificate_bound(cert));
    }
  }
}

// =============================================================================
// File format
// =============================================================================

TEST(CertificateIo, RoundTrip) {
  const Prime p(3);
  PfenderCertificate cert(p, Rational(3, 7), table(p, {{std::nullopt, Rational(5, 2)}, {0, -1}, {-2, Rational(-9, 4)}}),
                          DomainKind::interval, Rational(1, 2));
  const std::string text = write_certificate(cert);
  EXPECT_EQ(text, "c 3/7\nform interval\ncos_theta 1/2\nphi 0 5/2\nphi 3^0 -1\nphi 3^2 -9/4\n");
  EXPECT_EQ(read_certificate(text, p), cert);
  auto plain = trivial_tight_certificate(4, {{PAdicAbs::one(p), 12}}, p);
  EXPECT_EQ(read_certificate(write_certificate(plain), p), plain);
  EXPECT_EQ(write_certificate(plain), "c 1\nphi 0 3\nphi 3^0 -1\n");
}

TEST(CertificateIo, CommentsAndBlankLines) {
  const Prime p(5);
  auto cert = read_certificate("# header\n\nc 2\nphi 0 1  # trailing\n", p);
  EXPECT_EQ(cert.c(), 2);
  EXPECT_EQ(cert.phi_zero(), 1);
}

TEST(CertificateIo, Errors) {
  const Prime p(3);
  auto line_of = [&](const std::string& text) -> std::size_t {
    try {
      read_certificate(text, p);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("phi 0 1\n"), 2u);
  EXPECT_EQ(line_of("c 1\nphi 3^0 -1\n"), 3u);
  EXPECT_EQ(line_of("c 1\nc 2\nphi 0 1\n"), 2u);
  EXPECT_EQ(line_of("c 1\nphi 0 1\nphi 0 2\n"), 3u);
  EXPECT_EQ(line_of("c 0\nphi 0 1\n"), 1u);
  EXPECT_EQ(line_of("c 1\nform weird\nphi 0 1\n"), 2u);
  EXPECT_EQ(line_of("c 1\nphi 5^1 1\nphi 0 1\n"), 2u);
  EXPECT_EQ(line_of("c 1\nphi 0\n"), 2u);
  EXPECT_EQ(line_of("c 1\nphi 0 x\n"), 2u);
  EXPECT_EQ(line_of("c 1\nphi 0 1\nbogus 1\n"), 3u);
  EXPECT_EQ(line_of("c 1\ncos_theta 2\nphi 0 1\n"), 2u);
}
