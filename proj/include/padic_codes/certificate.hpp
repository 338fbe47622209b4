#pragma once

#include "padic_codes/code.hpp"
#include "padic_codes/simplex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padic_codes {

/// A certificate that cannot be applied to the given code (undefined value, wrong prime,
/// separation mismatch).
class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The code handed to the verifier fails validation.
class InvalidCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DomainKind {
  /// phi is given on the values that occur in the code.
  finite,
  /// phi is a step function on [0, inf): phi(r) is the entry at the largest key <= r.
  interval,
};

inline const char* to_string(DomainKind k) { return k == DomainKind::finite ? "finite" : "interval"; }

using PhiTable = std::map<PAdicAbs, Rational>;

class PfenderCertificate {
 public:
  PfenderCertificate(Prime prime, Rational c, PhiTable phi, DomainKind kind = DomainKind::finite,
                     std::optional<Rational> cos_theta = std::nullopt)
      : prime_(prime), c_(std::move(c)), phi_(std::move(phi)), kind_(kind), cos_theta_(std::move(cos_theta)) {
    if (c_ <= 0) throw std::invalid_argument("certificate constant c must be positive");
    for (const auto& [key, _] : phi_) {
      if (key.prime() != prime_) throw PrimeMismatch("certificate key over a different prime");
    }
    if (!phi_.contains(PAdicAbs::zero(prime_))) throw std::invalid_argument("certificate must define phi(0)");
    if (cos_theta_ && (*cos_theta_ < -1 || *cos_theta_ > 1)) {
      throw std::invalid_argument("certificate cos_theta outside [-1, 1]");
    }
  }

  const Prime& prime() const { return prime_; }
  const Rational& c() const { return c_; }
  const PhiTable& phi() const { return phi_; }
  DomainKind kind() const { return kind_; }
  const std::optional<Rational>& cos_theta() const { return cos_theta_; }
  const Rational& phi_zero() const { return phi_.at(PAdicAbs::zero(prime_)); }

  /// phi at r, or nullopt when the finite table has no entry.
  std::optional<Rational> evaluate(const PAdicAbs& r) const {
    if (kind_ == DomainKind::finite) {
      auto it = phi_.find(r);
      if (it == phi_.end()) return std::nullopt;
      return it->second;
    }
    auto it = phi_.upper_bound(r);
    --it;  // key 0 is always present
    return it->second;
  }

  /// (lambda phi, lambda c).
  PfenderCertificate scaled(const Rational& lambda) const {
    if (lambda <= 0) throw std::invalid_argument("scaling factor must be positive");
    PhiTable phi;
    for (const auto& [k, v] : phi_) phi.emplace(k, lambda * v);
    return PfenderCertificate(prime_, lambda * c_, std::move(phi), kind_, cos_theta_);
  }

  friend bool operator==(const PfenderCertificate&, const PfenderCertificate&) = default;

 private:
  Prime prime_;
  Rational c_;
  PhiTable phi_;
  DomainKind kind_;
  std::optional<Rational> cos_theta_;
};

/// (phi(0) + c) / c.
inline Rational certificate_bound(const PfenderCertificate& cert) { return (cert.phi_zero() + cert.c()) / cert.c(); }

struct ConditionTwoIssue {
  PAdicAbs value;
  /// phi(value) + c, positive here.
  Rational excess;
};

struct BoundResult {
  bool hypotheses_ok = false;
  /// Sum of phi over all n^2 ordered pairs.
  Rational phi_sum;
  bool sum_nonnegative = false;
  bool negativity_holds = false;
  std::vector<ConditionTwoIssue> negativity_violations;
  /// Only set when hypotheses_ok.
  std::optional<Rational> bound;
  std::optional<BigInt> implied_n_cap;
  /// phi(0) + c <= 1, where the bound sharpens to n <= 1/c.
  bool special_case = false;
  std::optional<BigInt> special_case_cap;
};

namespace certificate_detail {

// Values at which phi + c <= 0 is required.
inline std::vector<PAdicAbs> negativity_points(const PAdicCode& code, const PfenderCertificate& cert,
                                               const ValueMultiset& off_diagonal) {
  std::vector<PAdicAbs> points;
  if (cert.kind() == DomainKind::finite) {
    for (const auto& [v, _] : off_diagonal) points.push_back(v);
    return points;
  }
  Rational b;
  if (cert.cos_theta()) {
    b = 2 * (Rational(1) - *cert.cos_theta());
  } else if (code.spec().is_exact()) {
    b = code.spec().bound();
  } else {
    throw CertificateError("interval-form certificate needs an exact cos_theta");
  }
  // The step containing b, then every later step.
  auto it = cert.phi().begin();
  for (auto next = std::next(it); next != cert.phi().end() && next->first.compare(b) <= 0; ++next) it = next;
  for (; it != cert.phi().end(); ++it) points.push_back(it->first);
  return points;
}

inline void check_separation(const PAdicCode& code, const PfenderCertificate& cert) {
  if (!cert.cos_theta()) return;
  const SeparationSpec& spec = code.spec();
  if (spec.is_exact()) {
    if (spec.cos_theta() != *cert.cos_theta()) {
      throw CertificateError("certificate cos_theta " + to_string(*cert.cos_theta()) + " does not match the code's " +
                             spec.str());
    }
    return;
  }
  HighPrecision b_cert(2 * (Rational(1) - *cert.cos_theta()));
  HighPrecision diff = b_cert - spec.approximate_bound();
  if (abs(diff) > SeparationSpec::tolerance()) {
    throw CertificateError("certificate cos_theta does not match the code's " + spec.str());
  }
}

}  // namespace certificate_detail

/// Checks both hypotheses of the LP bound for this code and, when they hold, reports
/// n <= (phi(0) + c) / c. Throws std::logic_error if the code then exceeds the bound.
inline BoundResult verify_certificate(const PAdicCode& code, const PfenderCertificate& cert) {
  if (cert.prime() != code.prime()) throw CertificateError("certificate and code are over different primes");
  if (!validate_code(code).valid) throw InvalidCode("the code fails validation");
  if (code.self_product_precision()) {
    throw CertificateError("certificates need exact self-products; the code only has them modulo p^K");
  }
  certificate_detail::check_separation(code, cert);

  const ValueMultiset all = pair_value_multiset(code);
  const ValueMultiset off = off_diagonal_value_multiset(code);
  const Rational n(code.size());

  BoundResult r;
  r.phi_sum = 0;
  for (const auto& [value, count] : all) {
    auto phi = cert.evaluate(value);
    if (!phi) throw CertificateError("phi is undefined at " + value.str());
    r.phi_sum += Rational(count) * *phi;
  }
  r.sum_nonnegative = r.phi_sum >= 0;

  r.negativity_holds = true;
  for (const auto& v : certificate_detail::negativity_points(code, cert, off)) {
    auto phi = cert.evaluate(v);
    if (!phi) throw CertificateError("phi is undefined at " + v.str());
    Rational excess = *phi + cert.c();
    if (excess > 0) {
      r.negativity_holds = false;
      r.negativity_violations.push_back({v, excess});
    }
  }
  r.hypotheses_ok = r.sum_nonnegative && r.negativity_holds;
  if (!r.hypotheses_ok) return r;

  // psi = phi + c: c n^2 <= sum psi = sum phi + c n^2 <= n psi(0).
  const Rational psi_sum = r.phi_sum + cert.c() * n * n;
  const Rational psi_zero = cert.phi_zero() + cert.c();
  if (!(cert.c() * n * n <= psi_sum && psi_sum <= n * psi_zero)) {
    throw std::logic_error("certificate proof chain violated for a code of size " + std::to_string(code.size()));
  }
  r.bound = certificate_bound(cert);
  if (n > *r.bound) throw std::logic_error("code size exceeds a verified certificate bound");
  r.implied_n_cap = floor_of(*r.bound);
  r.special_case = psi_zero <= 1;
  if (r.special_case) {
    r.special_case_cap = floor_of(1 / cert.c());
    if (n > Rational(*r.special_case_cap)) throw std::logic_error("code size exceeds 1/c in the special case");
  }
  return r;
}

/// c = 1, phi(0) = n - 1, phi = -1 on every off-diagonal value: bound exactly n.
inline PfenderCertificate trivial_tight_certificate(std::size_t n, const ValueMultiset& off_diagonal,
                                                    const Prime& p) {
  if (n == 0) throw std::invalid_argument("code size must be >= 1");
  PhiTable phi;
  phi.emplace(PAdicAbs::zero(p), Rational(n - 1));
  for (const auto& [v, _] : off_diagonal) {
    if (v.is_zero()) throw std::invalid_argument("off-diagonal value 0 admits no tight certificate");
    phi.emplace(v, Rational(-1));
  }
  return PfenderCertificate(p, 1, std::move(phi));
}

/// Solves minimize phi(0) s.t. n phi(0) + sum mult(v) phi(v) >= 0, phi(v) <= -1, with c = 1.
inline PfenderCertificate synthesize_certificate_lp(const ValueMultiset& off_diagonal, std::size_t n, const Prime& p) {
  if (n == 0) throw std::invalid_argument("code size must be >= 1");
  std::vector<PAdicAbs> keys;
  for (const auto& [v, _] : off_diagonal) {
    if (v.is_zero()) throw std::invalid_argument("off-diagonal value 0 admits no certificate");
    keys.push_back(v);
  }
  const std::size_t vars = keys.size() + 1;
  LinearProgram lp;
  lp.sense = Sense::minimize;
  lp.objective.assign(vars, Rational(0));
  lp.objective[0] = 1;
  lp.free_variables.assign(vars, true);
  LinearConstraint sum{std::vector<Rational>(vars), Relation::greater_equal, Rational(0)};
  sum.coefficients[0] = Rational(n);
  for (std::size_t i = 0; i < keys.size(); ++i) sum.coefficients[i + 1] = Rational(off_diagonal.at(keys[i]));
  lp.constraints.push_back(std::move(sum));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    LinearConstraint neg{std::vector<Rational>(vars), Relation::less_equal, Rational(-1)};
    neg.coefficients[i + 1] = 1;
    lp.constraints.push_back(std::move(neg));
  }
  LpSolution s = rational_simplex(lp);
  if (s.status != LpStatus::optimal) {
    throw std::logic_error(std::string("certificate LP is ") + to_string(s.status));
  }
  PhiTable phi;
  phi.emplace(PAdicAbs::zero(p), s.values[0]);
  for (std::size_t i = 0; i < keys.size(); ++i) phi.emplace(keys[i], s.values[i + 1]);
  return PfenderCertificate(p, 1, std::move(phi));
}

inline PfenderCertificate synthesize_certificate_lp(const PAdicCode& code) {
  return synthesize_certificate_lp(off_diagonal_value_multiset(code), code.size(), code.prime());
}

}  // namespace padic_codes
