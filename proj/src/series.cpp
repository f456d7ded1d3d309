#include "secular/series.hpp"

#include <algorithm>
#include <string>

#include "secular/error.hpp"

namespace secular {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch, "series orders differ (" + std::to_string(a.order()) +
                                              " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  const auto n = std::min(order + 1, p.coeffs().size());
  std::copy_n(p.coeffs().begin(), n, s.coeffs_.begin());
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<mpq_class> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      acc[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
    }
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& q : acc) out.emplace_back(std::move(q));
  return TruncatedSeries(std::move(out));
}

Complex evaluate(const TruncatedSeries& series, const Complex& lambda, unsigned precision_bits) {
  PrecisionGuard guard(precision_bits);
  const Complex x(Real(lambda.re), Real(lambda.im));
  Complex acc;
  for (auto it = series.coeffs().rbegin(); it != series.coeffs().rend(); ++it) {
    acc *= x;
    acc.re += to_real(it->value());
  }
  return acc;
}

}  // namespace secular
