#include "secular/rational.hpp"

#include <ostream>
#include <regex>

#include "secular/error.hpp"

namespace secular {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderMismatch: return "order-mismatch";
    case ErrorKind::ZeroPolynomial: return "zero-polynomial";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::InexactDivision: return "inexact-division";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Degenerate: return "degenerate-spectrum";
    case ErrorKind::DimensionTooSmall: return "dimension-too-small";
    case ErrorKind::InvalidModel: return "invalid-model";
    case ErrorKind::DuplicateState: return "duplicate-state";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::NoExceptionalPoint: return "no-exceptional-point-at-this-order";
    case ErrorKind::TooFewCoefficients: return "too-few-coefficients";
    case ErrorKind::OracleConvergence: return "oracle-dimension-convergence";
  }
  return "unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*)");
  static const std::regex decimal(
      R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");

  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    const mpz_class num(m[1].str(), 10);
    const mpz_class den = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
    return Rational(num, den);
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string int_part = m[2].str();
    const std::string frac_part = m[3].matched ? m[3].str() : std::string();
    long exponent = 0;
    if (m[4].matched) {
      try {
        exponent = std::stol(m[4].str());
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "exponent out of range in '" + s + "'");
      }
      if (exponent > 100000 || exponent < -100000) {
        throw Error(ErrorKind::Parse, "exponent out of range in '" + s + "'");
      }
    }
    const std::string digits = int_part + frac_part;
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    if (m[1].str() == "-") num = -num;
    exponent -= static_cast<long>(frac_part.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? Rational(mpz_class(num * scale), mpz_class(1)) : Rational(num, scale);
  }
  throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace secular
