// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "padic_codes/padic_codes.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace padic_codes;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// cos_theta whose separation b is exactly the level-m value p^-m.
SeparationSpec level_spec(std::uint64_t p, std::int64_t m) {
  Rational b = 1;
  for (std::int64_t i = 0; i < m; ++i) b /= p;
  return SeparationSpec::from_cos_theta(1 - b / 2);
}

struct Instance {
  std::uint64_t p;
  std::size_t d;
  SeparationSpec spec;
};

std::vector<Instance> kissing_instances() {
  return {{3, 2, SeparationSpec::kissing()}, {5, 2, SeparationSpec::kissing()}};
}

std::vector<Instance> sweep_instances() {
  std::vector<Instance> out;
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::size_t d : {1u, 2u, 3u}) {
      for (std::int64_t m : {0, 1}) out.push_back({p, d, level_spec(p, m)});
    }
  }
  return out;
}

SearchOptions sweep_options(unsigned threads) {
  SearchOptions o;
  o.budget = {1'000'000, 1'000'000};
  o.threads = threads;
  return o;
}

// Reports for criteria 1-3 at a given thread count; timing fields are left out.
std::string deterministic_report(unsigned threads) {
  std::ostringstream out;
  for (const auto& [p, d, spec] : kissing_instances()) {
    auto k = kissing_number(Prime(p), d, threads);
    out << "kissing\t" << p << '\t' << d << '\t' << k.size;
    for (auto v : k.witness) out << '\t' << v;
    out << '\n';
  }
  for (const auto& inst : sweep_instances()) {
    auto r = search_max_code(Prime(inst.p), inst.d, inst.spec, sweep_options(threads));
    out << format_search(r, inst.spec);
    auto lp = synthesize_certificate_lp(r.witness);
    out << write_certificate(lp) << format_bound(verify_certificate(r.witness, lp), lp);
  }
  return out.str();
}

int run_cli(const std::string& args, std::string& output) {
  FILE* pipe = popen((std::string(PADIC_CLI) + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 4096> buf;
  output.clear();
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<PAdicCode> witnesses;

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& [p, d, spec] : kissing_instances()) {
    auto k = kissing_number(Prime(p), d);
    auto oracle = exhaustive_max_code(Prime(p), d, spec);
    if (k.size != 4 || oracle.size != 4) {
      o.fail("p=" + std::to_string(p) + ": clique " + std::to_string(k.size) + ", oracle " + std::to_string(oracle.size));
    }
    witnesses.push_back(search_max_code(Prime(p), d, spec).witness);
  }
  const double t = seconds_since(start);
  if (t >= 5) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "kissing(3,2) = kissing(5,2) = 4 = oracle, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto& inst : sweep_instances()) {
    const Prime p(inst.p);
    auto r = search_max_code(p, inst.d, inst.spec, sweep_options(1));
    auto oracle = exhaustive_max_code(p, inst.d, inst.spec, sweep_options(1).budget);
    if (r.max_code_size != oracle.size) {
      o.fail("p=" + std::to_string(inst.p) + " d=" + std::to_string(inst.d) + " " + inst.spec.str() + ": clique " +
             std::to_string(r.max_code_size) + ", oracle " + std::to_string(oracle.size));
    }
    witnesses.push_back(r.witness);
    ++checked;
  }
  const double t = seconds_since(start);
  if (t >= 300) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " instances agree, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& code : witnesses) {
    const Rational n(code.size());
    if (!validate_code(code).valid) {
      o.fail("a witness code fails validation");
      continue;
    }
    auto lp = synthesize_certificate_lp(code);
    auto tight = trivial_tight_certificate(code.size(), off_diagonal_value_multiset(code), code.prime());
    auto r_lp = verify_certificate(code, lp);
    auto r_tight = verify_certificate(code, tight);
    if (certificate_bound(lp) != n || !r_lp.hypotheses_ok || *r_lp.bound != n) o.fail("LP certificate bound differs from n");
    if (!r_tight.hypotheses_ok || *r_tight.bound != n) o.fail("trivial certificate bound differs from n");
  }
  if (o.pass) o.detail = std::to_string(witnesses.size()) + " witness codes, both certificates give exactly n";
  return o;
}

// Codes for the fuzz: every prefix of every witness.
std::vector<PAdicCode> fuzz_pool() {
  std::vector<PAdicCode> pool;
  for (const auto& w : witnesses) {
    const auto& v = w.vectors();
    for (std::size_t k = 1; k <= v.size(); ++k) {
      pool.emplace_back(w.prime(), w.dimension(), std::vector<PAdicVector>(v.begin(), v.begin() + k), w.spec());
    }
  }
  return pool;
}

Outcome criterion4() {
  Outcome o;
  auto pool = fuzz_pool();
  std::vector<ValueMultiset> multisets;
  for (const auto& c : pool) multisets.push_back(off_diagonal_value_multiset(c));
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(1, 12), den(1, 6), slack(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int pairs = 0;
  for (; pairs < 10'000; ++pairs) {
    const std::size_t i = pick(rng);
    const auto& code = pool[i];
    const Prime p = code.prime();
    const Rational c(num(rng), den(rng)), n(code.size());
    // phi + c <= 0 off the diagonal, then phi(0) just large enough for the sum plus slack.
    PhiTable phi;
    Rational off_sum = 0;
    for (const auto& [v, mult] : multisets[i]) {
      Rational value = -c - Rational(slack(rng), den(rng));
      phi.emplace(v, value);
      off_sum += Rational(mult) * value;
    }
    phi.emplace(PAdicAbs::zero(p), -off_sum / n + Rational(slack(rng), den(rng)));
    try {
      auto r = verify_certificate(code, PfenderCertificate(p, c, std::move(phi)));
      if (!r.hypotheses_ok) o.fail("a feasible certificate was rejected");
      else if (n > *r.bound) o.fail("code size exceeds the bound");
    } catch (const std::logic_error& e) {
      o.fail(std::string("proof-chain assertion fired: ") + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs over " + std::to_string(pool.size()) + " codes, no violation";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto pool = fuzz_pool();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6), positive(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& code = pool[pick(rng)];
    const Prime p = code.prime();
    PhiTable phi;
    phi.emplace(PAdicAbs::zero(p), Rational(num(rng) + 2 * static_cast<int>(code.size()), den(rng)));
    for (const auto& [v, _] : off_diagonal_value_multiset(code)) phi.emplace(v, Rational(num(rng) - 6, den(rng)));
    PfenderCertificate cert(p, Rational(positive(rng), den(rng)), phi);
    auto base = verify_certificate(code, cert);
    ok += base.hypotheses_ok;
    for (const Rational& lambda : {Rational(1, 7), Rational(3), Rational(22, 5)}) {
      auto scaled = cert.scaled(lambda);
      auto r = verify_certificate(code, scaled);
      if (r.hypotheses_ok != base.hypotheses_ok || certificate_bound(scaled) != certificate_bound(cert) ||
          r.bound != base.bound) {
        o.fail("scaling by " + to_string(lambda) + " changed the outcome");
      }
    }
  }
  if (o.pass) o.detail = "1000 certificates x 3 factors identical (" + std::to_string(ok) + " with hypotheses ok)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (unsigned n = 3; n <= 8; ++n) {
    for (unsigned k = 0; k <= 10; ++k) {
      if (gegenbauer_eval(k, n, 1) != 1) o.fail("G_" + std::to_string(k) + "(1) != 1 for n=" + std::to_string(n));
    }
  }
  double worst = 0;
  for (unsigned n = 3; n <= 8; ++n) {
    for (unsigned j = 0; j <= 8; ++j) {
      for (unsigned k = 0; k <= 8; ++k) {
        if (j != k) worst = std::max(worst, orthogonality_defect(j, k, n));
      }
    }
  }
  if (worst > 1e-9) o.fail("orthogonality defect " + std::to_string(worst));
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> c(-50, 50), den(1, 20), deg(0, 12), dim(3, 8);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& x : coeffs) x = Rational(c(rng), den(rng));
    Polynomial p(coeffs);
    if (expand_in_gegenbauer(p, dim(rng)).reconstruct() != p) o.fail("expansion round trip failed");
  }
  if (o.pass) {
    std::ostringstream d;
    d << "G_k(1) = 1, max defect " << worst << ", 500 round trips exact";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (unsigned n = 3; n <= 8; ++n) {
    auto r = delsarte_bound(Polynomial{Rational(1, 2), 1}, Rational(-1, 2), n);
    if (!r.bound || *r.bound != 3) o.fail("Delsarte bound is not 3 for n=" + std::to_string(n));
  }
  std::ifstream code_in(std::string(PADIC_DATA_DIR) + "/hexagon.code");
  std::ifstream cert_in(std::string(PADIC_DATA_DIR) + "/hexagon.cert");
  auto code = read_real_code(code_in);
  auto r = real_pfender_check(code, read_real_certificate(cert_in, code.radicand()));
  if (!r.hypotheses_ok || *r.bound != 6) o.fail("hexagon bound is not 6");
  if (o.pass) o.detail = "Delsarte bound 3, hexagon bound 6";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Prime p(3);
  const std::vector<Rational> cosines{Rational(49, 100), Rational(1, 3), 0, Rational(-1, 3), Rational(-1, 2),
                                      Rational(-99, 100), -1};
  std::size_t pairs = 0;
  for (std::size_t d : {1u, 2u}) {
    // Candidates: exact sphere points over every residue class mod 9, plus small vectors with
    // entries of every 3-adic size (these fail the unit conditions).
    std::vector<PAdicVector> candidates;
    const std::uint64_t modulus = 9;
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= modulus;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Residue x(d);
      std::uint64_t t = idx;
      for (auto& xi : x) {
        xi = t % modulus;
        t /= modulus;
      }
      if (residue_detail::dot_mod(x, x, modulus) == 1) candidates.emplace_back(p, exact_sphere_point(x, p, modulus));
    }
    const std::vector<Rational> small{-1, Rational(-1, 3), 0, Rational(1, 3), Rational(2, 3), 1, 3};
    std::uint64_t combos = 1;
    for (std::size_t j = 0; j < d; ++j) combos *= small.size();
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::vector<Rational> e(d);
      std::uint64_t t = idx;
      for (auto& ei : e) {
        ei = small[t % small.size()];
        t /= small.size();
      }
      candidates.emplace_back(p, e);
    }
    for (const auto& cos : cosines) {
      auto spec = SeparationSpec::from_cos_theta(cos);
      auto r = search_max_code(p, d, spec);
      if (r.max_code_size != 1) o.fail("search size " + std::to_string(r.max_code_size) + " at " + spec.str());
      std::string out;
      const std::string args = "search -p 3 -d " + std::to_string(d) + " --cos-theta " + to_string(cos);
      if (run_cli(args, out) != 0 || out.find("\nmax_code_size\t1\n") == std::string::npos) {
        o.fail("CLI " + args + " did not report size 1");
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i; j < candidates.size(); ++j) {
          ++pairs;
          if (validate_code(PAdicCode(p, d, {candidates[i], candidates[j]}, spec)).valid) {
            o.fail("a 2-vector code passed validation at " + spec.str());
          }
        }
      }
    }
  }
  if (o.pass) o.detail = "size 1 for 7 separations, d = 1, 2; " + std::to_string(pairs) + " two-vector codes rejected";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::string one = deterministic_report(1);
  for (unsigned t : {2u, 8u}) {
    if (deterministic_report(t) != one) o.fail("reports differ between 1 and " + std::to_string(t) + " threads");
  }
  if (o.pass) o.detail = "reports identical for 1, 2 and 8 threads (" + std::to_string(one.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"kissing numbers", criterion1},    {"oracle sweep", criterion2},       {"certificate tightness", criterion3},
      {"consistency fuzz", criterion4},   {"scaling invariance", criterion5}, {"Gegenbauer suite", criterion6},
      {"classical bounds", criterion7},   {"infeasibility", criterion8},      {"determinism", criterion9}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
