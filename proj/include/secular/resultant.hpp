#pragma once

#include <vector>

#include "secular/polynomial.hpp"

namespace secular {

/// Polynomial in W whose coefficients are polynomials in lambda;
/// coeffs[k] multiplies W^k. Trailing zero coefficients are trimmed.
class WPolynomial {
 public:
  WPolynomial() = default;
  explicit WPolynomial(std::vector<Polynomial> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
  const Polynomial& leading() const;

  /// d/dW.
  WPolynomial derivative() const;

  friend bool operator==(const WPolynomial&, const WPolynomial&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// Resultant of f and g with respect to W: the determinant of their Sylvester
/// matrix, computed exactly by Bareiss fraction-free elimination in Q[lambda].
Polynomial resultant(const WPolynomial& f, const WPolynomial& g);

/// Discriminant with respect to W:
/// (-1)^(n(n-1)/2) * resultant(f, f') / lead(f), n = deg_W f >= 1.
Polynomial discriminant(const WPolynomial& f);

/// Determinant of a square matrix over Q[lambda] by Bareiss elimination.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> matrix);

}  // namespace secular
