#pragma once

#include "padic_codes/polynomial.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace padic_codes {

namespace gegenbauer_detail {

inline void check_dim_param(unsigned n) {
  if (n < 3) throw std::invalid_argument("dim_param must be >= 3");
}

}  // namespace gegenbauer_detail

/// G_k^(n)(r) by the three-term recursion, normalised so that G_k(1) = 1.
inline Rational gegenbauer_eval(unsigned k, unsigned n, const Rational& r) {
  gegenbauer_detail::check_dim_param(n);
  Rational prev = 1, cur = r;
  if (k == 0) return prev;
  for (unsigned i = 2; i <= k; ++i) {
    Rational next = (Rational(2 * i + n - 4) * r * cur - Rational(i - 1) * prev) / Rational(i + n - 3);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Polynomial gegenbauer_polynomial(unsigned k, unsigned n) {
  gegenbauer_detail::check_dim_param(n);
  Polynomial prev = Polynomial::constant(1), cur = Polynomial::monomial(1);
  if (k == 0) return prev;
  const Polynomial r = Polynomial::monomial(1);
  for (unsigned i = 2; i <= k; ++i) {
    Polynomial next = Rational(1, i + n - 3) * (Rational(2 * i + n - 4) * (r * cur) - Rational(i - 1) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// G_0..G_m for one dim_param.
class GegenbauerBasis {
 public:
  GegenbauerBasis(unsigned dim_param, unsigned max_degree) : n_(dim_param) {
    gegenbauer_detail::check_dim_param(n_);
    for (unsigned k = 0; k <= max_degree; ++k) g_.push_back(gegenbauer_polynomial(k, n_));
  }

  unsigned dim_param() const { return n_; }
  unsigned max_degree() const { return static_cast<unsigned>(g_.size() - 1); }
  const Polynomial& operator[](unsigned k) const { return g_.at(k); }

 private:
  unsigned n_;
  std::vector<Polynomial> g_;
};

struct GegenbauerExpansion {
  unsigned dim_param;
  std::vector<Rational> coefficients;

  Polynomial reconstruct() const {
    GegenbauerBasis basis(dim_param, coefficients.empty() ? 0 : static_cast<unsigned>(coefficients.size() - 1));
    Polynomial out;
    for (unsigned k = 0; k < coefficients.size(); ++k) out = out + coefficients[k] * basis[k];
    return out;
  }
};

/// Coefficients a_k with P = sum a_k G_k^(n), by back substitution from the top degree.
inline GegenbauerExpansion expand_in_gegenbauer(const Polynomial& p, unsigned dim_param) {
  if (p.is_zero()) return {dim_param, {Rational(0)}};
  const unsigned m = static_cast<unsigned>(p.degree());
  GegenbauerBasis basis(dim_param, m);
  std::vector<Rational> a(m + 1);
  Polynomial residual = p;
  for (unsigned k = m + 1; k-- > 0;) {
    a[k] = residual.coefficient(k) / basis[k].leading();
    if (a[k] != 0) residual = residual - a[k] * basis[k];
  }
  if (!residual.is_zero()) throw std::logic_error("Gegenbauer expansion left a remainder");
  return {dim_param, std::move(a)};
}

/// |integral over [-1, 1] of G_j G_k (1 - r^2)^((n-3)/2) dr|, by adaptive Gauss-Kronrod after
/// r = cos t, which makes the integrand smooth: G_j(cos t) G_k(cos t) sin^(n-2) t on [0, pi].
/// Throws std::runtime_error when the error estimate stays above 1e-12.
inline double orthogonality_defect(unsigned j, unsigned k, unsigned dim_param) {
  const double target = 1e-12;
  auto to_doubles = [](const Polynomial& p) {
    std::vector<double> c;
    for (const auto& q : p.coefficients()) c.push_back(static_cast<double>(q));
    return c;
  };
  const auto gj = to_doubles(gegenbauer_polynomial(j, dim_param));
  const auto gk = to_doubles(gegenbauer_polynomial(k, dim_param));
  auto horner = [](const std::vector<double>& c, double x) {
    double acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  const int weight_power = static_cast<int>(dim_param) - 2;
  auto f = [&](double t) {
    const double r = std::cos(t);
    return horner(gj, r) * horner(gk, r) * std::pow(std::sin(t), weight_power);
  };
  double error = 0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, boost::math::constants::pi<double>(), 20, target, &error);
  if (!(error <= target)) {
    throw std::runtime_error("quadrature did not reach the 1e-12 error target (estimate " + std::to_string(error) +
                             ")");
  }
  return std::abs(value);
}

}  // namespace padic_codes
