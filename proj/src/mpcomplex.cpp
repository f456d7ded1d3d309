#include "secular/mpcomplex.hpp"

#include <cmath>
#include <sstream>

namespace secular {

unsigned decimal_digits(unsigned precision_bits) {
  return static_cast<unsigned>(std::floor(precision_bits * 0.30102999566398120));
}

PrecisionGuard::PrecisionGuard(unsigned precision_bits)
    : saved_digits10_(Real::default_precision()) {
  // Boost counts precision in decimal digits; round up so at least the
  // requested number of bits is carried.
  const auto digits10 =
      static_cast<unsigned>(std::ceil(precision_bits * 0.30102999566398120));
  Real::default_precision(digits10 < 2 ? 2 : digits10);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps the intermediate ratio bounded.
  if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
    const Real t = o.im / o.re;
    const Real d = o.re + o.im * t;
    Real r = (re + im * t) / d;
    Real i = (im - re * t) / d;
    re = std::move(r);
    im = std::move(i);
  } else {
    const Real t = o.re / o.im;
    const Real d = o.re * t + o.im;
    Real r = (re * t + im) / d;
    Real i = (im * t - re) / d;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex conj(const Complex& z) { return Complex(z.re, Real(-z.im)); }

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

mpq_class to_rational(const Real& x) {
  if (x == 0) return mpq_class(0);
  mpz_class mantissa;
  const long exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), x.backend().data());
  mpq_class q(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return q;
}

Real to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string format(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

std::string format_fixed(const Real& x, unsigned decimals) {
  return x.str(static_cast<std::streamsize>(decimals), std::ios_base::fixed);
}

}  // namespace secular
