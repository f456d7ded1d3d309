#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace secular {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Decimal digits carried by a binary precision (floor(bits * log10 2)).
unsigned decimal_digits(unsigned precision_bits);

/// Sets the working precision for newly created Real values for the lifetime
/// of the guard and restores the previous one afterwards.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned precision_bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_;
};

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i = 0.0) : re(r), im(i) {}  // NOLINT

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  Complex operator-() const { return Complex(Real(-re), Real(-im)); }
};

Real abs(const Complex& z);
Complex conj(const Complex& z);
bool is_zero(const Complex& z);

/// Exact value of a finite Real (every binary float is a dyadic rational).
mpq_class to_rational(const Real& x);
/// Correctly rounded conversion at the current working precision.
Real to_real(const mpq_class& q);

/// Scientific notation with `digits` significant digits.
std::string format(const Real& x, unsigned digits);
/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(const Real& x, unsigned decimals);

}  // namespace secular
