#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secular/ese.hpp"
#include "secular/models.hpp"
#include "secular/roots.hpp"
#include "secular/rspt.hpp"

namespace secular {

/// Reference |lambda_p| for the lowest pair of the 2pi-even Mathieu states,
/// from the discriminant of the full secular equation.
inline constexpr const char* kMathieuReferenceModulus = "3.769957494";

struct LocateOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::uint64_t seed = RootOptions{}.seed;
  /// Discriminant roots closer to the origin than this are ignored.
  double exclude_zero_tol = 1e-20;
  /// Largest W-root gap at lambda_p that still counts as a coalescence.
  double gap_threshold = 1e-4;
};

struct ExceptionalPointEstimate {
  std::size_t order = 0;
  std::vector<std::size_t> states;
  TruncationMode mode = TruncationMode::Full;
  unsigned precision_bits = kDefaultPrecisionBits;
  Complex lambda_p;  // imaginary part >= 0
  Real modulus;
  /// Minimum pairwise distance between ESE roots W_n(lambda_p).
  Real coalescence_gap;
  /// |discriminant(lambda_p)|.
  Real discriminant_residual;
  bool coalesced = false;
  std::vector<Complex> w_roots;
  int discriminant_degree = 0;
};

/// model -> series -> ESE -> discriminant -> closest root to the origin,
/// followed by a coalescence check of the ESE roots there. Mathieu models are
/// sized automatically so every series is exact to order K.
ExceptionalPointEstimate locate_ep(const ModelSpec& model, std::span<const std::size_t> states,
                                   std::size_t order, TruncationMode mode = TruncationMode::Full,
                                   const LocateOptions& options = {});

struct EpTableRow {
  std::size_t order = 0;
  std::optional<ExceptionalPointEstimate> estimate;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

/// One row per order; a failing order is recorded in its row.
std::vector<EpTableRow> ep_table(const ModelSpec& model, std::span<const std::size_t> states,
                                 std::span<const std::size_t> orders,
                                 TruncationMode mode = TruncationMode::Full,
                                 const LocateOptions& options = {});

/// Lowest `count` eigenvalues of the dim x dim matrix H0 + lambda H_I in
/// double precision (dense symmetric or nonsymmetric solver), ascending.
/// Mathieu truncations are recomputed at dim + 10 and must agree to 1e-10.
std::vector<double> oracle_eigenvalues(const ModelSpec& model, double lambda, std::size_t dim,
                                       std::size_t count);

struct RadiusEstimate {
  enum class Method { DombSykes, ConjugatePair, RootTest };

  double radius = 0.0;
  Method method = Method::RootTest;
  /// Extrapolated |c_j|^(-1/j).
  double root_test = 0.0;
  /// Extrapolated ratio estimate (Domb-Sykes, or its conjugate-pair form).
  double ratio_fit = 0.0;
  double uncertainty = 0.0;
};

std::string to_string(RadiusEstimate::Method method);

/// Radius of convergence from the coefficients alone. Ratios c_j / c_{j-1}
/// of constant sign go through a Domb-Sykes fit against 1/j. Oscillating
/// ratios signal a complex-conjugate pair of singularities; then
/// (c_j^2 - c_{j+1} c_{j-1}) / (c_{j-1}^2 - c_j c_{j-2}) -> 1/R^2 is fitted
/// against 1/j instead. The root test is extrapolated alongside, and the
/// reported uncertainty is the spread between the estimators.
RadiusEstimate estimate_radius(const EigenSeries& series);

}  // namespace secular
