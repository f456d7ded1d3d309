#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secular/mpcomplex.hpp"
#include "secular/rational.hpp"

namespace secular {

/// Dense univariate polynomial over the rationals; coeffs()[k] multiplies
/// x^k. Trailing zeros are always trimmed and the zero polynomial is the
/// empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Polynomial derivative() const;
  /// Drops every x^j with j > order.
  Polynomial truncated(std::size_t order) const;

  Rational evaluate(const Rational& x) const;
  Complex evaluate(const Complex& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a exactly; raises InexactDivision otherwise.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace secular
