#pragma once

#include "padic_codes/certificate.hpp"
#include "padic_codes/classical.hpp"
#include "padic_codes/search.hpp"

#include <sstream>
#include <string>

// Tab-separated `key value...` reports. Vector indices are 1-based. Nothing here depends on
// timing or thread count.

namespace padic_codes {

inline std::string format_validation(const ValidationReport& r) {
  std::ostringstream out;
  out << "valid\t" << (r.valid ? "yes" : "no") << '\n';
  out << "unit_norm\t" << to_string(r.unit_norm) << '\n';
  out << "unit_self_product\t" << to_string(r.unit_self_product) << '\n';
  out << "self_product_exact\t" << (r.self_product_exact ? "yes" : "no") << '\n';
  out << "separation\t" << to_string(r.separation) << '\n';
  for (const auto& i : r.norm_violations) out << "norm_violation\t" << i.index + 1 << '\t' << i.norm.str() << '\n';
  for (const auto& i : r.self_product_violations) {
    out << "self_product_violation\t" << i.index + 1 << '\t' << to_string(i.self_product) << '\n';
  }
  for (const auto& i : r.pair_violations) {
    out << "pair_violation\t" << i.j + 1 << '\t' << i.k + 1 << '\t' << i.value.str() << '\n';
  }
  for (const auto& i : r.indeterminate_pairs) {
    out << "pair_indeterminate\t" << i.j + 1 << '\t' << i.k + 1 << '\t' << i.value.str() << '\n';
  }
  return out.str();
}

inline std::string format_search(const SearchResult& r, const SeparationSpec& spec) {
  std::ostringstream out;
  out << "prime\t" << r.prime.value() << '\n';
  out << "dim\t" << r.dim << '\n';
  out << "cos_theta\t" << to_string(spec.cos_theta()) << '\n';
  out << "b\t" << to_string(spec.bound()) << '\n';
  out << "level\t" << r.level.str() << '\n';
  if (r.modulus) out << "modulus\t" << r.modulus << '\n';
  out << "vertices\t" << r.vertices << '\n';
  out << "edges\t" << r.edges << '\n';
  out << "max_code_size\t" << r.max_code_size << '\n';
  out << "exact\t" << (r.exact ? "yes" : "lower_bound") << '\n';
  for (const auto& v : r.witness.vectors()) {
    out << "witness";
    for (const auto& x : v.entries()) out << '\t' << to_string(x);
    out << '\n';
  }
  return out.str();
}

inline std::string format_bound(const BoundResult& r, const PfenderCertificate& cert) {
  std::ostringstream out;
  out << "form\t" << to_string(cert.kind()) << '\n';
  out << "c\t" << to_string(cert.c()) << '\n';
  out << "phi_sum\t" << to_string(r.phi_sum) << '\n';
  out << "sum_nonnegative\t" << (r.sum_nonnegative ? "holds" : "fails") << '\n';
  out << "negativity\t" << (r.negativity_holds ? "holds" : "fails") << '\n';
  for (const auto& v : r.negativity_violations) {
    out << "negativity_violation\t" << v.value.str() << '\t' << to_string(v.excess) << '\n';
  }
  out << "hypotheses\t" << (r.hypotheses_ok ? "ok" : "fail") << '\n';
  if (r.bound) {
    out << "bound\t" << to_string(*r.bound) << '\n';
    out << "n_cap\t" << to_string(*r.implied_n_cap) << '\n';
  }
  if (r.special_case_cap) out << "special_case_cap\t" << to_string(*r.special_case_cap) << '\n';
  return out.str();
}

inline std::string format_real_validation(const RealValidationReport& r) {
  std::ostringstream out;
  out << "valid\t" << (r.valid ? "yes" : "no") << '\n';
  for (std::size_t j : r.non_unit) out << "norm_violation\t" << j + 1 << '\n';
  for (const auto& [j, k] : r.too_close) out << "pair_violation\t" << j + 1 << '\t' << k + 1 << '\n';
  return out.str();
}

inline std::string format_delsarte(const DelsarteReport& r) {
  std::ostringstream out;
  out << "dim_param\t" << r.expansion.dim_param << '\n';
  for (std::size_t k = 0; k < r.expansion.coefficients.size(); ++k) {
    out << "a\t" << k << '\t' << to_string(r.expansion.coefficients[k]) << '\n';
  }
  out << "nonpositive_on_interval\t" << (r.nonpositive_holds ? "holds" : "fails") << '\n';
  out << "a0_positive\t" << (r.a0_positive ? "holds" : "fails") << '\n';
  out << "coefficients_nonnegative\t" << (r.coefficients_nonnegative ? "holds" : "fails") << '\n';
  if (r.bound) out << "bound\t" << to_string(*r.bound) << '\n';
  return out.str();
}

inline std::string format_real_bound(const RealBoundResult& r) {
  std::ostringstream out;
  out << "phi_sum\t" << to_string(r.phi_sum) << '\n';
  out << "sum_nonnegative\t" << (r.sum_nonnegative ? "holds" : "fails") << '\n';
  out << "negativity\t" << (r.negativity_holds ? "holds" : "fails") << '\n';
  for (const auto& v : r.negativity_violations) out << "negativity_violation\t" << v.str() << '\n';
  out << "hypotheses\t" << (r.hypotheses_ok ? "ok" : "fail") << '\n';
  if (r.bound) out << "bound\t" << to_string(*r.bound) << '\n';
  return out.str();
}

}  // namespace padic_codes
