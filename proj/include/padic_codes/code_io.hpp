#pragma once

#include "padic_codes/code.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace padic_codes {

/// Malformed input file; line() is 1-based (0 when not attributable to a line).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace io_detail {

/// Splits a line into whitespace-separated tokens, dropping '#' comments.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

inline Rational rational_at(const std::string& token, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw FormatError(line, e.what());
  }
}

inline std::uint64_t unsigned_at(const std::string& token, std::size_t line, const char* what) {
  Rational q = rational_at(token, line);
  if (denominator_of(q) != 1 || q < 0 || q > Rational(BigInt(1) << 62)) {
    throw FormatError(line, std::string(what) + " must be a non-negative integer, got '" + token + "'");
  }
  return static_cast<std::uint64_t>(numerator_of(q));
}

inline bool flag_at(const std::string& token, std::size_t line) {
  if (token == "0") return false;
  if (token == "1") return true;
  throw FormatError(line, "expected 0 or 1, got '" + token + "'");
}

}  // namespace io_detail

/// Reads the line-oriented code format:
///
///   prime <p>
///   dim <d>
///   cos_theta <a/b>            (or: theta <radians, decimal>)
///   variant <pe|pn> <unit_norm:0|1> <unit_self:0|1>     (optional, default pe 1 1)
///   precision <K>              (optional; <t,t> = 1 checked modulo p^K)
///   <d rationals per vector line>
inline PAdicCode read_code(std::istream& in) {
  using namespace io_detail;
  std::optional<Prime> prime;
  std::optional<std::size_t> dim;
  std::optional<SeparationSpec> spec;
  CodeVariant variant;
  std::optional<std::int64_t> precision;
  std::vector<PAdicVector> vectors;

  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];
    auto expect_args = [&](std::size_t n) {
      if (tokens.size() != n + 1) {
        throw FormatError(line_no, "'" + key + "' takes " + std::to_string(n) + " argument(s)");
      }
    };
    auto before_vectors = [&] {
      if (!vectors.empty()) throw FormatError(line_no, "header '" + key + "' after vector lines");
    };
    if (key == "prime") {
      before_vectors();
      expect_args(1);
      if (tokens[1] == "real") throw FormatError(line_no, "real code given where a p-adic code is expected");
      try {
        prime = Prime(unsigned_at(tokens[1], line_no, "prime"));
      } catch (const std::invalid_argument& e) {
        throw FormatError(line_no, e.what());
      }
    } else if (key == "dim") {
      before_vectors();
      expect_args(1);
      dim = unsigned_at(tokens[1], line_no, "dim");
      if (*dim == 0) throw FormatError(line_no, "dim must be >= 1");
    } else if (key == "cos_theta") {
      before_vectors();
      expect_args(1);
      try {
        spec = SeparationSpec::from_cos_theta(rational_at(tokens[1], line_no));
      } catch (const std::invalid_argument& e) {
        throw FormatError(line_no, e.what());
      }
    } else if (key == "theta") {
      before_vectors();
      expect_args(1);
      try {
        spec = SeparationSpec::from_theta(HighPrecision(tokens[1]));
      } catch (const std::exception&) {
        throw FormatError(line_no, "malformed theta '" + tokens[1] + "'");
      }
    } else if (key == "variant") {
      before_vectors();
      expect_args(3);
      if (tokens[1] == "pe") {
        variant.inequality = Inequality::pe;
      } else if (tokens[1] == "pn") {
        variant.inequality = Inequality::pn;
      } else {
        throw FormatError(line_no, "variant must be pe or pn, got '" + tokens[1] + "'");
      }
      variant.require_unit_norm = flag_at(tokens[2], line_no);
      variant.require_unit_self_product = flag_at(tokens[3], line_no);
    } else if (key == "precision") {
      before_vectors();
      expect_args(1);
      precision = static_cast<std::int64_t>(unsigned_at(tokens[1], line_no, "precision"));
      if (*precision < 1) throw FormatError(line_no, "precision must be >= 1");
    } else {
      if (!prime || !dim || !spec) {
        throw FormatError(line_no, "vector line before the prime, dim and cos_theta headers");
      }
      if (tokens.size() != *dim) {
        throw FormatError(line_no, "expected " + std::to_string(*dim) + " entries, found " +
                                       std::to_string(tokens.size()));
      }
      std::vector<Rational> entries;
      entries.reserve(tokens.size());
      for (const auto& t : tokens) entries.push_back(rational_at(t, line_no));
      vectors.emplace_back(*prime, std::move(entries));
    }
  }
  if (!prime) throw FormatError(line_no + 1, "missing 'prime' header");
  if (!dim) throw FormatError(line_no + 1, "missing 'dim' header");
  if (!spec) throw FormatError(line_no + 1, "missing 'cos_theta' header");
  if (vectors.empty()) throw FormatError(line_no + 1, "no vector lines");
  return PAdicCode(*prime, *dim, std::move(vectors), *spec, variant, precision);
}

inline PAdicCode read_code(const std::string& text) {
  std::istringstream in(text);
  return read_code(in);
}

inline void write_code(std::ostream& out, const PAdicCode& code) {
  out << "prime " << code.prime().value() << '\n';
  out << "dim " << code.dimension() << '\n';
  out << code.spec().str() << '\n';
  const auto& v = code.variant();
  out << "variant " << (v.inequality == Inequality::pe ? "pe" : "pn") << ' ' << (v.require_unit_norm ? 1 : 0)
      << ' ' << (v.require_unit_self_product ? 1 : 0) << '\n';
  if (code.self_product_precision()) out << "precision " << *code.self_product_precision() << '\n';
  for (const auto& vec : code.vectors()) {
    for (std::size_t j = 0; j < vec.dimension(); ++j) {
      if (j) out << ' ';
      out << to_string(vec.entries()[j]);
    }
    out << '\n';
  }
}

inline std::string write_code(const PAdicCode& code) {
  std::ostringstream out;
  write_code(out, code);
  return out.str();
}

}  // namespace padic_codes
