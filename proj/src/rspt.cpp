#include "secular/rspt.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "secular/error.hpp"

namespace secular {

namespace {

using Vector = std::vector<mpq_class>;

Vector apply_coupling(const BandedOperator& op, const Vector& v) {
  const std::size_t m = op.dim();
  Vector out(m);
  for (const auto& [offset, entries] : op.bands()) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].is_zero()) continue;
      // Entry k of band d couples (row, col) = (k, k + d) or (k - d, k).
      const std::size_t row = offset >= 0 ? k : k + static_cast<std::size_t>(-offset);
      const std::size_t col = offset >= 0 ? k + static_cast<std::size_t>(offset) : k;
      if (sgn(v[col]) == 0) continue;
      out[row] += entries[k].value() * v[col];
    }
  }
  return out;
}

}  // namespace

std::size_t minimal_dim(std::size_t n, std::size_t order, std::size_t bandwidth) {
  return n + order * bandwidth + 1;
}

EigenSeries rs_series(const BandedOperator& op, std::size_t n, std::size_t order) {
  const std::size_t site = op.site_of_state(n);
  if (op.is_truncation()) {
    const std::size_t need = minimal_dim(n, order, op.bandwidth());
    if (op.dim() < need) {
      throw Error(ErrorKind::DimensionTooSmall,
                  "dimension " + std::to_string(op.dim()) + " is below " + std::to_string(need) +
                      " needed for state " + std::to_string(n) + " at order " + std::to_string(order));
    }
  }

  const std::size_t m = op.dim();
  const mpq_class& eps_n = op.diag0()[site].value();
  Vector inverse_gap(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (k != site) inverse_gap[k] = 1 / mpq_class(eps_n - op.diag0()[k].value());
  }

  std::vector<Vector> c;
  c.reserve(order + 1);
  c.emplace_back(m);
  c[0][site] = 1;

  std::vector<mpq_class> energy(order + 1);
  energy[0] = eps_n;
  for (std::size_t j = 1; j <= order; ++j) {
    Vector next = apply_coupling(op, c[j - 1]);
    energy[j] = next[site];
    for (std::size_t k = 0; k < m; ++k) {
      if (k == site) continue;
      for (std::size_t i = 1; i < j; ++i) {
        if (sgn(energy[i]) != 0 && sgn(c[j - i][k]) != 0) next[k] -= energy[i] * c[j - i][k];
      }
      next[k] *= inverse_gap[k];
    }
    next[site] = 0;
    c.push_back(std::move(next));
  }

  std::vector<Rational> coeffs;
  coeffs.reserve(order + 1);
  for (auto& e : energy) coeffs.emplace_back(std::move(e));
  return EigenSeries{n, TruncatedSeries(std::move(coeffs))};
}

}  // namespace secular
