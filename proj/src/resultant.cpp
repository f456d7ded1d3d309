#include "secular/resultant.hpp"

#include <utility>

#include "secular/error.hpp"

namespace secular {

WPolynomial::WPolynomial(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Polynomial& WPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial in W");
  return coeffs_.back();
}

WPolynomial WPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Polynomial> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  }
  return WPolynomial(std::move(d));
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(1);
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  }
  bool negate = false;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees the division is exact.
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Polynomial();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Polynomial resultant(const WPolynomial& f, const WPolynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
  }
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> sylvester(size, std::vector<Polynomial>(size));
  // n shifted rows of f, then m shifted rows of g, coefficients by descending power.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) sylvester[r][r + k] = f.coeffs()[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) sylvester[n + r][r + k] = g.coeffs()[n - k];
  }
  return bareiss_determinant(std::move(sylvester));
}

Polynomial discriminant(const WPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1 in W");
  const auto n = static_cast<std::size_t>(f.degree());
  Polynomial res = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return divide_exact(res, f.leading());
}

}  // namespace secular
