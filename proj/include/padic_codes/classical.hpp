#pragma once

#include "padic_codes/certificate.hpp"
#include "padic_codes/code_io.hpp"
#include "padic_codes/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace padic_codes {

/// a + b sqrt(D) with rational a, b and a fixed non-square integer D > 1 (D = 0: rationals only).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a, Rational b = 0, std::uint64_t radicand = 0)
      : a_(std::move(a)), b_(std::move(b)), d_(b_ == 0 ? 0 : radicand) {
    if (b_ != 0 && radicand < 2) throw std::invalid_argument("irrational part needs a radicand >= 2");
    if (b_ != 0) {
      std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(radicand)));
      while (s * s > radicand) --s;
      while ((s + 1) * (s + 1) <= radicand) ++s;
      if (s * s == radicand) throw std::invalid_argument("radicand " + std::to_string(radicand) + " is a square");
    }
  }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  std::uint64_t radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 D
    const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, common(x, y));
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, common(x, y));
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const std::uint64_t d = common(x, y);
    return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "a" or "a:b".
  std::string str() const { return b_ == 0 ? to_string(a_) : to_string(a_) + ":" + to_string(b_); }

  double approximate() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
  }

 private:
  static std::uint64_t common(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.d_ && y.d_ && x.d_ != y.d_) throw std::invalid_argument("mixing different quadratic fields");
    return x.d_ ? x.d_ : y.d_;
  }

  Rational a_ = 0;
  Rational b_ = 0;
  std::uint64_t d_ = 0;
};

inline QuadraticNumber parse_quadratic(std::string_view text, std::uint64_t radicand) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return QuadraticNumber(parse_rational(text));
  if (radicand == 0) throw std::invalid_argument("'" + std::string(text) + "' needs a radicand header");
  return QuadraticNumber(parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1)), radicand);
}

/// Unit vectors of R^d with entries in Q(sqrt D), separated by <t_j, t_k> <= cos_theta.
class RealCode {
 public:
  RealCode(std::size_t dim, std::vector<std::vector<QuadraticNumber>> vectors, Rational cos_theta,
           std::uint64_t radicand = 0)
      : dim_(dim), vectors_(std::move(vectors)), cos_theta_(std::move(cos_theta)), radicand_(radicand) {
    if (vectors_.empty()) throw std::invalid_argument("a code needs at least one vector");
    if (cos_theta_ < -1 || cos_theta_ > 1) throw std::invalid_argument("cos_theta outside [-1, 1]");
    for (const auto& v : vectors_) {
      if (v.size() != dim_) throw DimensionMismatch("real code vector of the wrong dimension");
    }
  }

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<std::vector<QuadraticNumber>>& vectors() const { return vectors_; }
  const Rational& cos_theta() const { return cos_theta_; }
  std::uint64_t radicand() const { return radicand_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<QuadraticNumber>> vectors_;
  Rational cos_theta_;
  std::uint64_t radicand_;
};

inline QuadraticNumber real_inner_product(const std::vector<QuadraticNumber>& u, const std::vector<QuadraticNumber>& v) {
  QuadraticNumber s;
  for (std::size_t i = 0; i < u.size(); ++i) s = s + u[i] * v[i];
  return s;
}

struct RealValidationReport {
  bool valid = false;
  std::vector<std::size_t> non_unit;
  /// Pairs (j, k), j < k, with <t_j, t_k> > cos_theta.
  std::vector<std::pair<std::size_t, std::size_t>> too_close;
};

inline RealValidationReport validate_real_code(const RealCode& code) {
  RealValidationReport r;
  const auto& vs = code.vectors();
  const QuadraticNumber one(1), bound(code.cos_theta());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (real_inner_product(vs[j], vs[j]) != one) r.non_unit.push_back(j);
    for (std::size_t k = j + 1; k < vs.size(); ++k) {
      if (real_inner_product(vs[j], vs[k]) > bound) r.too_close.emplace_back(j, k);
    }
  }
  r.valid = r.non_unit.empty() && r.too_close.empty();
  return r;
}

/// Gram matrix entries over all n^2 ordered pairs.
inline std::map<QuadraticNumber, std::uint64_t> gram_multiset(const RealCode& code) {
  std::map<QuadraticNumber, std::uint64_t> out;
  const auto& vs = code.vectors();
  for (std::size_t j = 0; j < vs.size(); ++j) {
    ++out[real_inner_product(vs[j], vs[j])];
    for (std::size_t k = j + 1; k < vs.size(); ++k) out[real_inner_product(vs[j], vs[k])] += 2;
  }
  return out;
}

struct DelsarteReport {
  GegenbauerExpansion expansion;
  /// P <= 0 on [-1, cos_theta].
  bool nonpositive_holds = false;
  bool a0_positive = false;
  bool coefficients_nonnegative = false;
  std::optional<Rational> bound;
};

/// Delsarte's LP bound n <= P(1) / a_0, with both conditions decided exactly.
inline DelsarteReport delsarte_bound(const Polynomial& p, const Rational& cos_theta, unsigned dim_param) {
  if (p.is_zero()) throw std::invalid_argument("the polynomial must be nonzero");
  if (cos_theta < -1 || cos_theta > 1) throw std::invalid_argument("cos_theta outside [-1, 1]");
  DelsarteReport r{expand_in_gegenbauer(p, dim_param), false, false, false, std::nullopt};
  r.nonpositive_holds = nonpositive_on(p, Rational(-1), cos_theta);
  const auto& a = r.expansion.coefficients;
  r.a0_positive = a[0] > 0;
  r.coefficients_nonnegative = std::all_of(a.begin() + 1, a.end(), [](const Rational& x) { return x >= 0; });
  if (r.nonpositive_holds && r.a0_positive && r.coefficients_nonnegative) r.bound = p(Rational(1)) / a[0];
  return r;
}

using RealPhiTable = std::map<QuadraticNumber, Rational>;

struct RealPfenderCertificate {
  Rational c;
  RealPhiTable phi;
};

struct RealBoundResult {
  bool hypotheses_ok = false;
  Rational phi_sum;
  bool sum_nonnegative = false;
  bool negativity_holds = false;
  /// Points r in [-1, cos_theta] with phi(r) + c > 0.
  std::vector<QuadraticNumber> negativity_violations;
  std::optional<Rational> bound;
};

/// Checks the real LP-bound hypotheses over the code's Gram values. phi + c <= 0 is checked at
/// every off-diagonal inner product and at every table entry inside [-1, cos_theta].
inline RealBoundResult real_pfender_check(const RealCode& code, const RealPfenderCertificate& cert) {
  if (cert.c <= 0) throw std::invalid_argument("certificate constant c must be positive");
  if (!validate_real_code(code).valid) throw InvalidCode("the real code fails validation");
  const QuadraticNumber one(1), lo(-1), hi(code.cos_theta());
  auto phi_at = [&](const QuadraticNumber& r) {
    auto it = cert.phi.find(r);
    if (it == cert.phi.end()) throw CertificateError("phi is undefined at " + r.str());
    return it->second;
  };
  const Rational phi_one = phi_at(one);

  RealBoundResult r;
  r.phi_sum = 0;
  std::vector<QuadraticNumber> points;
  for (const auto& [value, count] : gram_multiset(code)) {
    r.phi_sum += Rational(count) * phi_at(value);
    if (value != one) points.push_back(value);
  }
  for (const auto& [value, _] : cert.phi) {
    if (value >= lo && value <= hi) points.push_back(value);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  r.sum_nonnegative = r.phi_sum >= 0;
  r.negativity_holds = true;
  for (const auto& v : points) {
    if (phi_at(v) + cert.c > 0) {
      r.negativity_holds = false;
      r.negativity_violations.push_back(v);
    }
  }
  r.hypotheses_ok = r.sum_nonnegative && r.negativity_holds;
  if (!r.hypotheses_ok) return r;
  r.bound = (phi_one + cert.c) / cert.c;
  if (Rational(code.size()) > *r.bound) throw std::logic_error("real code exceeds a verified certificate bound");
  return r;
}

/// True when the first header of a code file is `prime real`.
inline bool is_real_code_text(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto tokens = io_detail::tokenize(line);
    if (tokens.empty()) continue;
    return tokens.size() == 2 && tokens[0] == "prime" && tokens[1] == "real";
  }
  return false;
}

/// Reads
///
///   prime real
///   dim <d>
///   cos_theta <a/b>
///   radicand <D>               (optional; entries may then be written a:b for a + b sqrt(D))
///   <d entries per vector line>
inline RealCode read_real_code(std::istream& in) {
  using namespace io_detail;
  bool seen_prime = false;
  std::optional<std::size_t> dim;
  std::optional<Rational> cos_theta;
  std::uint64_t radicand = 0;
  std::vector<std::vector<QuadraticNumber>> vectors;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];
    const bool header = key == "prime" || key == "dim" || key == "cos_theta" || key == "radicand";
    if (header) {
      if (!vectors.empty()) throw FormatError(line_no, "header '" + key + "' after vector lines");
      if (tokens.size() != 2) throw FormatError(line_no, "'" + key + "' takes one argument");
      if (key == "prime") {
        if (tokens[1] != "real") throw FormatError(line_no, "expected 'prime real'");
        seen_prime = true;
      } else if (key == "dim") {
        dim = unsigned_at(tokens[1], line_no, "dim");
        if (*dim == 0) throw FormatError(line_no, "dim must be >= 1");
      } else if (key == "cos_theta") {
        cos_theta = rational_at(tokens[1], line_no);
        if (*cos_theta < -1 || *cos_theta > 1) throw FormatError(line_no, "cos_theta outside [-1, 1]");
      } else {
        radicand = unsigned_at(tokens[1], line_no, "radicand");
        try {
          QuadraticNumber(0, 1, radicand);
        } catch (const std::invalid_argument& e) {
          throw FormatError(line_no, e.what());
        }
      }
      continue;
    }
    if (!seen_prime || !dim || !cos_theta) throw FormatError(line_no, "vector line before the prime/dim/cos_theta headers");
    if (tokens.size() != *dim) {
      throw FormatError(line_no, "expected " + std::to_string(*dim) + " entries, got " + std::to_string(tokens.size()));
    }
    std::vector<QuadraticNumber> v;
    for (const auto& t : tokens) {
      try {
        v.push_back(parse_quadratic(t, radicand));
      } catch (const std::invalid_argument& e) {
        throw FormatError(line_no, e.what());
      }
    }
    vectors.push_back(std::move(v));
  }
  if (!seen_prime) throw FormatError(line_no + 1, "missing 'prime real'");
  if (!dim) throw FormatError(line_no + 1, "missing 'dim'");
  if (!cos_theta) throw FormatError(line_no + 1, "missing 'cos_theta'");
  if (vectors.empty()) throw FormatError(line_no + 1, "no vectors");
  return RealCode(*dim, std::move(vectors), *cos_theta, radicand);
}

inline RealCode read_real_code(const std::string& text) {
  std::istringstream in(text);
  return read_real_code(in);
}

/// Reads `c <a/b>` and `phi <r> <a/b>` lines, r written like a code entry.
inline RealPfenderCertificate read_real_certificate(std::istream& in, std::uint64_t radicand) {
  using namespace io_detail;
  std::optional<Rational> c;
  RealPhiTable phi;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c" && tokens.size() == 2) {
      if (c) throw FormatError(line_no, "duplicate 'c'");
      c = rational_at(tokens[1], line_no);
      if (*c <= 0) throw FormatError(line_no, "c must be positive");
    } else if (tokens[0] == "phi" && tokens.size() == 3) {
      QuadraticNumber r;
      try {
        r = parse_quadratic(tokens[1], radicand);
      } catch (const std::invalid_argument& e) {
        throw FormatError(line_no, e.what());
      }
      if (!phi.emplace(r, rational_at(tokens[2], line_no)).second) {
        throw FormatError(line_no, "phi given twice at " + r.str());
      }
    } else {
      throw FormatError(line_no, "expected 'c <value>' or 'phi <point> <value>'");
    }
  }
  if (!c) throw FormatError(line_no + 1, "missing 'c'");
  return {*c, std::move(phi)};
}

inline RealPfenderCertificate read_real_certificate(const std::string& text, std::uint64_t radicand) {
  std::istringstream in(text);
  return read_real_certificate(in, radicand);
}

}  // namespace padic_codes
