#pragma once

#include <span>
#include <vector>

#include "secular/mpcomplex.hpp"
#include "secular/polynomial.hpp"
#include "secular/rational.hpp"

namespace secular {

/// Power series in the coupling carried to a fixed order K:
/// coeffs()[j] multiplies lambda^j for j = 0..K. Every product discards the
/// terms above lambda^K. Binary operations require equal orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Order is coeffs.size() - 1; an empty list is rejected.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// First order + 1 coefficients of p.
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }
  bool is_zero() const;

  Polynomial to_polynomial() const { return Polynomial(coeffs_); }

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Horner evaluation at `lambda` with `precision_bits` of working precision.
Complex evaluate(const TruncatedSeries& series, const Complex& lambda,
                 unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace secular
