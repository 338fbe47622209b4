#pragma once

#include "padic_codes/certificate.hpp"
#include "padic_codes/code_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace padic_codes {

/// Reads a certificate:
///
///   c <a/b>
///   form <finite|interval>     (optional, default finite)
///   cos_theta <a/b>            (optional; checked against the code)
///   phi <0|p^k> <a/b>          (one line per value; p^k is the absolute value p^k)
inline PfenderCertificate read_certificate(std::istream& in, const Prime& prime) {
  using namespace io_detail;
  std::optional<Rational> c, cos_theta;
  DomainKind kind = DomainKind::finite;
  PhiTable phi;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];
    auto expect = [&](std::size_t count) {
      if (tokens.size() != count) {
        throw FormatError(line_no, "'" + key + "' takes " + std::to_string(count - 1) + " argument(s)");
      }
    };
    if (key == "c") {
      expect(2);
      if (c) throw FormatError(line_no, "duplicate 'c'");
      c = rational_at(tokens[1], line_no);
      if (*c <= 0) throw FormatError(line_no, "c must be positive");
    } else if (key == "form") {
      expect(2);
      if (tokens[1] == "finite") {
        kind = DomainKind::finite;
      } else if (tokens[1] == "interval") {
        kind = DomainKind::interval;
      } else {
        throw FormatError(line_no, "form must be 'finite' or 'interval'");
      }
    } else if (key == "cos_theta") {
      expect(2);
      cos_theta = rational_at(tokens[1], line_no);
      if (*cos_theta < -1 || *cos_theta > 1) throw FormatError(line_no, "cos_theta outside [-1, 1]");
    } else if (key == "phi") {
      expect(3);
      PAdicAbs value = PAdicAbs::zero(prime);
      try {
        value = parse_padic_abs(tokens[1], prime);
      } catch (const std::invalid_argument& e) {
        throw FormatError(line_no, e.what());
      }
      if (!phi.emplace(value, rational_at(tokens[2], line_no)).second) {
        throw FormatError(line_no, "phi given twice at " + value.str());
      }
    } else {
      throw FormatError(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (!c) throw FormatError(line_no + 1, "missing 'c'");
  if (!phi.contains(PAdicAbs::zero(prime))) throw FormatError(line_no + 1, "missing 'phi 0'");
  return PfenderCertificate(prime, *c, std::move(phi), kind, cos_theta);
}

inline PfenderCertificate read_certificate(const std::string& text, const Prime& prime) {
  std::istringstream in(text);
  return read_certificate(in, prime);
}

inline void write_certificate(std::ostream& out, const PfenderCertificate& cert) {
  out << "c " << to_string(cert.c()) << '\n';
  if (cert.kind() != DomainKind::finite) out << "form " << to_string(cert.kind()) << '\n';
  if (cert.cos_theta()) out << "cos_theta " << to_string(*cert.cos_theta()) << '\n';
  for (const auto& [v, q] : cert.phi()) out << "phi " << v.str() << ' ' << to_string(q) << '\n';
}

inline std::string write_certificate(const PfenderCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

}  // namespace padic_codes
