#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secular/error.hpp"
#include "secular/mpcomplex.hpp"
#include "secular/polynomial.hpp"

namespace secular {

struct RootOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  int max_iterations = 200;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct RootSet {
  std::vector<Complex> roots;
  /// |p(root)| at the reported root.
  std::vector<Real> residuals;
  /// Groups (size >= 2) of indices into roots that sit closer than
  /// cluster_tolerance(precision_bits) * max(1, |root|); these approximate a
  /// multiple root and should be read through their centroid.
  std::vector<std::vector<std::size_t>> clusters;
  unsigned precision_bits = kDefaultPrecisionBits;
  int iterations = 0;
};

/// Relative distance below which two roots are treated as one cluster:
/// 2^(-bits/4). A double root perturbed by rounding splits by about
/// 2^(-bits/2), so this sits well above that split and well below any
/// resolved separation.
double cluster_tolerance(unsigned precision_bits);

/// Raised when the simultaneous iteration has not settled every root after
/// the configured number of sweeps; best() holds the last iterates.
class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, RootSet best)
      : Error(ErrorKind::NonConvergence, what), best_(std::move(best)) {}
  const RootSet& best() const noexcept { return best_; }

 private:
  RootSet best_;
};

/// All complex roots of p (degree >= 1) by Aberth-Ehrlich simultaneous
/// iteration started on a jittered circle of the Fujiwara-bound radius,
/// followed by Newton polishing. p and p' are evaluated exactly in rational
/// arithmetic at each (dyadic) iterate and rounded once.
RootSet find_roots(const Polynomial& p, const RootOptions& options = {});

/// Same iteration for complex coefficients, lowest power first; evaluation is
/// Horner in working precision.
RootSet find_roots(std::span<const Complex> coeffs, const RootOptions& options = {});

/// Roots of least modulus above exclude_zero_tol. Roots whose moduli tie
/// within 1e3 * residual (floored at 2^(-bits/2) * |root|) come back together,
/// upper-half-plane member first.
std::vector<Complex> smallest_modulus_roots(const RootSet& roots, double exclude_zero_tol);

/// Largest relative distance from conj(root) to the nearest root; near zero
/// for the root set of a real polynomial.
Real conjugate_closure_defect(const RootSet& roots);

}  // namespace secular
