#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secular/rational.hpp"

namespace secular {

enum class ModelKind {
  MathieuPiEven,
  MathieuPiOdd,
  Mathieu2PiEven,
  Mathieu2PiOdd,
  Generic,
};

std::string to_string(ModelKind kind);
/// Accepts the names used on the command line, e.g. "mathieu-2pi-even".
ModelKind parse_model_kind(std::string_view name);
bool is_mathieu(ModelKind kind);

/// H = H0 + lambda * H_I with H0 diagonal and H_I banded.
///
/// bands[d][k] holds H_I[k][k + d] for d >= 0 and H_I[k - d][k] for d < 0,
/// k = 0 .. dim - |d| - 1, so bands[+d][k] * bands[-d][k] is the product of the
/// two couplings between sites k and k + |d|. Entries need not be symmetric.
class BandedOperator {
 public:
  /// Validates shapes and the non-degeneracy of diag0. `truncation` marks a
  /// finite section of an infinite operator, whose perturbation series are
  /// only exact when the dimension is large enough for the requested order.
  BandedOperator(std::vector<Rational> diag0, std::map<int, std::vector<Rational>> bands,
                 bool truncation);

  std::size_t dim() const noexcept { return diag0_.size(); }
  std::size_t bandwidth() const noexcept { return bandwidth_; }
  bool is_truncation() const noexcept { return truncation_; }
  const std::vector<Rational>& diag0() const noexcept { return diag0_; }
  const std::map<int, std::vector<Rational>>& bands() const noexcept { return bands_; }

  /// H_I[row][col]; zero outside the band.
  Rational coupling(std::size_t row, std::size_t col) const;

  /// Position in diag0 of the n-th smallest unperturbed value (n is 1-based).
  std::size_t site_of_state(std::size_t n) const;

 private:
  std::vector<Rational> diag0_;
  std::map<int, std::vector<Rational>> bands_;
  std::vector<std::size_t> order_;
  std::size_t bandwidth_ = 0;
  bool truncation_ = false;
};

/// What to build. Mathieu kinds need only a dimension (0 lets the pipeline
/// choose); generic models carry their entries as exact rational strings.
struct ModelSpec {
  ModelKind kind = ModelKind::Mathieu2PiEven;
  std::size_t dim = 0;
  std::vector<std::string> diag0;
  std::map<int, std::vector<std::string>> bands;
};

/// Tridiagonal matrix of -d^2/dx^2 + 2 lambda cos(2x) in the trigonometric
/// basis of one Mathieu symmetry class, truncated to `dim` functions.
BandedOperator build_mathieu(ModelKind subspace, std::size_t dim);

BandedOperator build_generic(const ModelSpec& spec);

/// Mathieu kinds are built at max(spec.dim, min_dim); generic models ignore
/// min_dim.
BandedOperator build_model(const ModelSpec& spec, std::size_t min_dim = 0);

/// Reads the JSON model file format:
///   {"kind": "generic", "dim": 3, "diag0": ["1", "2", "3"],
///    "bands": {"1": ["1", "1"], "-1": ["1", "1"], "0": ["0", "0", "0"]}}
/// Mathieu files need only "kind" and optionally "dim".
ModelSpec parse_model_spec(std::string_view json_text);
ModelSpec load_model_file(const std::string& path);

}  // namespace secular
