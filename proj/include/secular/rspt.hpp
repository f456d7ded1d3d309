#pragma once

#include <cstddef>

#include "secular/models.hpp"
#include "secular/series.hpp"

namespace secular {

/// Rayleigh-Schroedinger series of one eigenvalue, E_n^[K].
struct EigenSeries {
  std::size_t state = 1;  // 1-based, counted in ascending diag0 order
  TruncatedSeries series{0};
};

/// Smallest truncation dimension for which the order-K coefficients of state
/// n are those of the infinite matrix: the j-th wavefunction correction
/// reaches j * bandwidth sites past n. Returns n + K * bandwidth + 1.
std::size_t minimal_dim(std::size_t n, std::size_t order, std::size_t bandwidth);

/// Exact eigenvalue series of state n through lambda^K.
///
/// Uses the intermediate-normalisation recursion on right vectors only:
///   c_0 = e_n,  E_j = (H_I c_{j-1})[n],
///   c_j[m] = ((H_I c_{j-1})[m] - sum_{i=1}^{j-1} E_i c_{j-i}[m]) / (e_n - e_m),
///   c_j[n] = 0.
/// For operators that truncate an infinite matrix the dimension must be at
/// least minimal_dim(n, K, bandwidth).
EigenSeries rs_series(const BandedOperator& op, std::size_t n, std::size_t order);

}  // namespace secular
