#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "secular/mpcomplex.hpp"
#include "secular/polynomial.hpp"
#include "secular/resultant.hpp"
#include "secular/roots.hpp"
#include "secular/rspt.hpp"

namespace secular {

/// Whether the discriminant is cut at lambda^K after it is formed.
enum class TruncationMode { Full, TruncateAfter };

std::string to_string(TruncationMode mode);
TruncationMode parse_truncation_mode(std::string_view name);

/// Effective secular equation W^N + sum_{j=1}^N p_j(lambda) W^{N-j}.
/// p[j - 1] holds p_j; every p_j has degree <= order in lambda.
struct EsePolynomial {
  std::size_t order = 0;
  std::vector<std::size_t> states;
  std::vector<Polynomial> p;

  std::size_t n_states() const noexcept { return p.size(); }
  /// Coefficients in W, lowest power first, leading 1 included.
  WPolynomial as_w_polynomial() const;
};

/// Expands the product of (W - E_n^[K]) over the given series, re-truncating
/// at lambda^K after every multiplication.
EsePolynomial build_ese(std::span<const EigenSeries> series);

/// Discriminant of the ESE with respect to W.
Polynomial ese_discriminant(const EsePolynomial& ese, TruncationMode mode = TruncationMode::Full);

/// The N roots W_n(lambda) of the ESE at a complex coupling.
std::vector<Complex> ese_roots_in_w(const EsePolynomial& ese, const Complex& lambda,
                                    const RootOptions& options = {});

}  // namespace secular
