#include "secular/ese.hpp"

#include <algorithm>
#include <set>

#include "secular/error.hpp"

namespace secular {

std::string to_string(TruncationMode mode) {
  return mode == TruncationMode::Full ? "full" : "truncate-after";
}

TruncationMode parse_truncation_mode(std::string_view name) {
  if (name == "full") return TruncationMode::Full;
  if (name == "truncate-after") return TruncationMode::TruncateAfter;
  throw Error(ErrorKind::InvalidArgument, "unknown truncation mode '" + std::string(name) + "'");
}

WPolynomial EsePolynomial::as_w_polynomial() const {
  const std::size_t n = p.size();
  std::vector<Polynomial> coeffs(n + 1);
  coeffs[n] = Polynomial::constant(1);
  for (std::size_t j = 1; j <= n; ++j) coeffs[n - j] = p[j - 1];
  return WPolynomial(std::move(coeffs));
}

EsePolynomial build_ese(std::span<const EigenSeries> series) {
  if (series.size() < 2) throw Error(ErrorKind::InvalidArgument, "the ESE needs at least two states");
  const std::size_t order = series.front().series.order();
  std::set<std::size_t> seen;
  for (const auto& s : series) {
    if (s.series.order() != order) {
      throw Error(ErrorKind::OrderMismatch, "all eigenvalue series must share one order");
    }
    if (!seen.insert(s.state).second) {
      throw Error(ErrorKind::DuplicateState, "state " + std::to_string(s.state) + " listed twice");
    }
  }

  // product[k] multiplies W^k.
  std::vector<TruncatedSeries> product{TruncatedSeries::constant(1, order)};
  for (const auto& s : series) {
    const TruncatedSeries minus_e = -s.series;
    std::vector<TruncatedSeries> next(product.size() + 1, TruncatedSeries(order));
    for (std::size_t k = 0; k < product.size(); ++k) {
      next[k + 1] += product[k];
      next[k] += product[k] * minus_e;
    }
    product = std::move(next);
  }

  EsePolynomial ese;
  ese.order = order;
  const std::size_t n = series.size();
  for (const auto& s : series) ese.states.push_back(s.state);
  for (std::size_t j = 1; j <= n; ++j) ese.p.push_back(product[n - j].to_polynomial());
  return ese;
}

Polynomial ese_discriminant(const EsePolynomial& ese, TruncationMode mode) {
  if (ese.n_states() < 2) throw Error(ErrorKind::InvalidArgument, "the ESE needs at least two states");
  Polynomial disc = discriminant(ese.as_w_polynomial());
  return mode == TruncationMode::TruncateAfter ? disc.truncated(ese.order) : disc;
}

std::vector<Complex> ese_roots_in_w(const EsePolynomial& ese, const Complex& lambda,
                                    const RootOptions& options) {
  PrecisionGuard guard(options.precision_bits);
  const Complex x(Real(lambda.re), Real(lambda.im));
  const std::size_t n = ese.n_states();
  std::vector<Complex> coeffs(n + 1);
  coeffs[n] = Complex(1.0);
  for (std::size_t j = 1; j <= n; ++j) coeffs[n - j] = ese.p[j - 1].evaluate(x);
  return find_roots(std::span<const Complex>(coeffs), options).roots;
}

}  // namespace secular
