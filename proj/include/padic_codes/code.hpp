#pragma once

#include "padic_codes/padic_vector.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padic_codes {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

enum class Verdict { holds, fails, indeterminate, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::indeterminate: return "indeterminate";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

/// Angular separation of a code. Exact mode carries cos(theta) as a rational; approximate
/// mode carries theta itself and decides comparisons only outside a 1e-30 band around b.
class SeparationSpec {
 public:
  static SeparationSpec from_cos_theta(Rational cos_theta) {
    if (cos_theta < -1 || cos_theta > 1) {
      throw std::invalid_argument("cos(theta) = " + to_string(cos_theta) + " outside [-1, 1]");
    }
    SeparationSpec s;
    s.cos_theta_ = std::move(cos_theta);
    return s;
  }

  /// theta = pi/3, cos(theta) = 1/2, b = 1.
  static SeparationSpec kissing() { return from_cos_theta(Rational(1, 2)); }

  static SeparationSpec from_theta(HighPrecision theta) {
    SeparationSpec s;
    s.theta_ = std::move(theta);
    return s;
  }

  static HighPrecision tolerance() { return HighPrecision("1e-30"); }

  bool is_exact() const { return cos_theta_.has_value(); }

  const Rational& cos_theta() const {
    if (!cos_theta_) throw std::logic_error("cos(theta) requested from an approximate separation");
    return *cos_theta_;
  }

  const HighPrecision& theta() const {
    if (!theta_) throw std::logic_error("theta requested from an exact separation");
    return *theta_;
  }

  /// b = 2(1 - cos theta), exact mode only.
  Rational bound() const { return 2 * (Rational(1) - cos_theta()); }

  HighPrecision approximate_bound() const {
    if (is_exact()) return HighPrecision(bound());
    return 2 * (1 - boost::multiprecision::cos(*theta_));
  }

  /// Decides value >= b.
  Verdict meets_bound(const PAdicAbs& value) const {
    if (is_exact()) return value.at_least(bound()) ? Verdict::holds : Verdict::fails;
    HighPrecision diff = HighPrecision(value.to_rational()) - approximate_bound();
    if (boost::multiprecision::abs(diff) <= tolerance()) return Verdict::indeterminate;
    return diff > 0 ? Verdict::holds : Verdict::fails;
  }

  std::string str() const {
    if (is_exact()) return "cos_theta " + to_string(*cos_theta_);
    return "theta " + theta_->str(40);
  }

  friend bool operator==(const SeparationSpec& a, const SeparationSpec& b) {
    return a.cos_theta_ == b.cos_theta_ && a.theta_ == b.theta_;
  }

 private:
  SeparationSpec() = default;

  std::optional<Rational> cos_theta_;
  std::optional<HighPrecision> theta_;
};

enum class Inequality { pe, pn };

/// Which conditions of the code definition are enforced. The default is the literal one:
/// |2 - 2<t_j, t_k>| >= b plus unit sup-norm and unit self-product.
struct CodeVariant {
  Inequality inequality = Inequality::pe;
  bool require_unit_norm = true;
  bool require_unit_self_product = true;

  friend bool operator==(const CodeVariant&, const CodeVariant&) = default;
};

/// A finite list of vectors in Q_p^d together with its separation requirement.
class PAdicCode {
 public:
  PAdicCode(Prime prime, std::size_t dim, std::vector<PAdicVector> vectors, SeparationSpec spec,
            CodeVariant variant = {}, std::optional<std::int64_t> self_product_precision = std::nullopt)
      : prime_(prime),
        dim_(dim),
        vectors_(std::move(vectors)),
        spec_(std::move(spec)),
        variant_(variant),
        self_product_precision_(self_product_precision) {
    if (vectors_.empty()) throw std::invalid_argument("a code needs at least one vector");
    for (const auto& v : vectors_) {
      if (v.prime() != prime_) throw PrimeMismatch("code vector over a different prime");
      if (v.dimension() != dim_) {
        throw DimensionMismatch("code vector of dimension " + std::to_string(v.dimension()) +
                                ", expected " + std::to_string(dim_));
      }
    }
    if (self_product_precision_ && *self_product_precision_ < 1) {
      throw std::invalid_argument("self-product precision must be >= 1");
    }
  }

  const Prime& prime() const { return prime_; }
  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<PAdicVector>& vectors() const { return vectors_; }
  const SeparationSpec& spec() const { return spec_; }
  const CodeVariant& variant() const { return variant_; }

  /// When set, <t,t> = 1 is only required modulo p^K (Hensel-lifted witnesses).
  const std::optional<std::int64_t>& self_product_precision() const { return self_product_precision_; }

 private:
  Prime prime_;
  std::size_t dim_;
  std::vector<PAdicVector> vectors_;
  SeparationSpec spec_;
  CodeVariant variant_;
  std::optional<std::int64_t> self_product_precision_;
};

struct NormIssue {
  std::size_t index;
  PAdicAbs norm;
};

struct SelfProductIssue {
  std::size_t index;
  Rational self_product;
};

/// value is |2 - 2<t_j,t_k>| under (PE) and ||t_j - t_k|| under (PN).
struct PairIssue {
  std::size_t j;
  std::size_t k;
  PAdicAbs value;
  Verdict verdict;
};

struct ValidationReport {
  bool valid = true;
  Verdict unit_norm = Verdict::skipped;
  Verdict unit_self_product = Verdict::skipped;
  Verdict separation = Verdict::skipped;
  /// Every <t,t> equals 1 exactly (as opposed to only modulo p^K).
  bool self_product_exact = true;
  std::vector<NormIssue> norm_violations;
  std::vector<SelfProductIssue> self_product_violations;
  std::vector<PairIssue> pair_violations;
  std::vector<PairIssue> indeterminate_pairs;
};

/// 2 - 2<u,v>
inline Rational pair_argument(const PAdicVector& u, const PAdicVector& v) {
  return Rational(2) - 2 * padic_inner_product(u, v).value();
}

inline ValidationReport validate_code(const PAdicCode& code) {
  ValidationReport report;
  const Prime& p = code.prime();
  const auto& vs = code.vectors();
  const auto one = PAdicAbs::one(p);

  if (code.variant().require_unit_norm) {
    report.unit_norm = Verdict::holds;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      PAdicAbs norm = sup_norm(vs[j]);
      if (norm != one) {
        report.unit_norm = Verdict::fails;
        report.norm_violations.push_back({j, norm});
      }
    }
  }

  for (const auto& v : vs) {
    if (padic_inner_product(v, v).value() != 1) report.self_product_exact = false;
  }
  if (code.variant().require_unit_self_product) {
    report.unit_self_product = Verdict::holds;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      Rational t = padic_inner_product(vs[j], vs[j]).value();
      bool ok = t == 1;
      if (!ok && code.self_product_precision()) {
        ok = valuation(t - 1, p) >= ExtendedInt(*code.self_product_precision());
      }
      if (!ok) {
        report.unit_self_product = Verdict::fails;
        report.self_product_violations.push_back({j, t});
      }
    }
  }

  report.separation = Verdict::holds;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t k = j + 1; k < vs.size(); ++k) {
      PAdicAbs value = code.variant().inequality == Inequality::pe ? abs_p(pair_argument(vs[j], vs[k]), p)
                                                                   : sup_norm(vs[j] - vs[k]);
      PAdicAbs compared = code.variant().inequality == Inequality::pe ? value : value.squared();
      Verdict v = code.spec().meets_bound(compared);
      if (v == Verdict::fails) {
        report.pair_violations.push_back({j, k, value, v});
      } else if (v == Verdict::indeterminate) {
        report.indeterminate_pairs.push_back({j, k, value, v});
      }
    }
  }
  if (!report.pair_violations.empty()) {
    report.separation = Verdict::fails;
  } else if (!report.indeterminate_pairs.empty()) {
    report.separation = Verdict::indeterminate;
  }

  auto passes = [](Verdict v) { return v == Verdict::holds || v == Verdict::skipped; };
  report.valid = passes(report.unit_norm) && passes(report.unit_self_product) && passes(report.separation);
  return report;
}

/// Multiset of absolute values, keyed in increasing order.
using ValueMultiset = std::map<PAdicAbs, std::uint64_t>;

inline std::uint64_t multiset_size(const ValueMultiset& values) {
  std::uint64_t total = 0;
  for (const auto& [_, count] : values) total += count;
  return total;
}

/// All n^2 values |2 - 2<t_j,t_k>| over ordered pairs, diagonal included.
inline ValueMultiset pair_value_multiset(const PAdicCode& code) {
  ValueMultiset out;
  const auto& vs = code.vectors();
  for (std::size_t j = 0; j < vs.size(); ++j) {
    ++out[abs_p(pair_argument(vs[j], vs[j]), code.prime())];
    for (std::size_t k = j + 1; k < vs.size(); ++k) {
      out[abs_p(pair_argument(vs[j], vs[k]), code.prime())] += 2;
    }
  }
  return out;
}

/// The j != k part of pair_value_multiset.
inline ValueMultiset off_diagonal_value_multiset(const PAdicCode& code) {
  ValueMultiset out;
  const auto& vs = code.vectors();
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t k = j + 1; k < vs.size(); ++k) {
      out[abs_p(pair_argument(vs[j], vs[k]), code.prime())] += 2;
    }
  }
  return out;
}

/// Valuation threshold equivalent to |2 - 2t| >= b for Z_p-valued inner products t.
class Level {
 public:
  enum class Kind { finite, infeasible, unbounded };

  static Level finite(std::int64_t m) { return Level(Kind::finite, m); }
  static Level infeasible() { return Level(Kind::infeasible, 0); }
  static Level unbounded() { return Level(Kind::unbounded, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }

  std::int64_t value() const {
    if (kind_ != Kind::finite) throw std::logic_error("level " + str() + " has no finite value");
    return m_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::finite: return std::to_string(m_);
      case Kind::infeasible: return "infeasible";
      case Kind::unbounded: return "+inf";
    }
    return "?";
  }

  friend bool operator==(const Level&, const Level&) = default;

 private:
  Level(Kind kind, std::int64_t m) : kind_(kind), m_(m) {}

  Kind kind_;
  std::int64_t m_;
};

/// Largest m >= 0 with (attainable value at valuation m) >= b.
///
/// For odd p, |2 - 2t| = |1 - t| = p^(-v(1-t)) with v(1-t) >= 0, so the admissible pairs are
/// exactly those with v(1-t) <= m where p^(-m) >= b > p^(-m-1); b > 1 leaves no admissible pair.
/// For p = 2 the factor |2|_2 = 1/2 shifts every value: |2 - 2t| = 2^(-v(1-t)-1), so the cut is
/// 2^(-m-1) >= b and b > 1/2 is infeasible. b = 0 admits every pair (unbounded level).
inline Level effective_level(const SeparationSpec& spec, const Prime& p) {
  Rational b = spec.bound();
  if (b == 0) return Level::unbounded();
  const std::int64_t shift = p.is_odd() ? 0 : 1;
  auto attainable = [&](std::int64_t m) { return PAdicAbs(p, m + shift); };
  if (!attainable(0).at_least(b)) return Level::infeasible();
  std::int64_t m = 0;
  while (attainable(m + 1).at_least(b)) ++m;
  return Level::finite(m);
}

}  // namespace padic_codes
