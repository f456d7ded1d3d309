#include "secular/eplocate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>

#include "secular/error.hpp"

namespace secular {

namespace {

void check_states(std::span<const std::size_t> states) {
  if (states.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two states");
  std::set<std::size_t> seen;
  for (auto s : states) {
    if (s < 1) throw Error(ErrorKind::InvalidArgument, "state indices are 1-based");
    if (!seen.insert(s).second) {
      throw Error(ErrorKind::DuplicateState, "state " + std::to_string(s) + " listed twice");
    }
  }
}

Eigen::MatrixXd dense_matrix(const BandedOperator& op, double lambda) {
  const auto m = static_cast<Eigen::Index>(op.dim());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) a(k, k) = op.diag0()[static_cast<std::size_t>(k)].to_double();
  for (const auto& [offset, entries] : op.bands()) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto row = static_cast<Eigen::Index>(offset >= 0 ? k : k - offset);
      const auto col = static_cast<Eigen::Index>(offset >= 0 ? k + offset : k);
      a(row, col) += lambda * entries[k].to_double();
    }
  }
  return a;
}

bool is_symmetric(const BandedOperator& op) {
  for (const auto& [offset, entries] : op.bands()) {
    if (offset <= 0) continue;
    const auto mirror = op.bands().find(-offset);
    if (mirror == op.bands().end() || mirror->second != entries) return false;
  }
  for (const auto& [offset, entries] : op.bands()) {
    if (offset < 0 && op.bands().find(-offset) == op.bands().end()) return false;
  }
  return true;
}

std::vector<double> lowest_eigenvalues(const BandedOperator& op, double lambda, std::size_t count) {
  const Eigen::MatrixXd a = dense_matrix(op, lambda);
  std::vector<double> values;
  if (is_symmetric(op)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "oracle eigensolver failed");
    values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "oracle eigensolver failed");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.push_back(solver.eigenvalues()[i].real());
  }
  std::sort(values.begin(), values.end());
  values.resize(std::min(count, values.size()));
  return values;
}

struct Fit {
  double intercept = 0.0;
  double slope = 0.0;
};

/// Least-squares line through the last `take` points.
Fit fit_line(const std::vector<std::pair<double, double>>& pts, std::size_t take) {
  take = std::min(take, pts.size());
  const auto first = pts.end() - static_cast<long>(take);
  double mx = 0.0;
  double my = 0.0;
  for (auto it = first; it != pts.end(); ++it) {
    mx += it->first;
    my += it->second;
  }
  mx /= static_cast<double>(take);
  my /= static_cast<double>(take);
  double sxy = 0.0;
  double sxx = 0.0;
  for (auto it = first; it != pts.end(); ++it) {
    sxy += (it->first - mx) * (it->second - my);
    sxx += (it->first - mx) * (it->first - mx);
  }
  Fit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  return f;
}

std::size_t tail_size(std::size_t n) { return std::max<std::size_t>(3, n / 2 + 1); }

}  // namespace

ExceptionalPointEstimate locate_ep(const ModelSpec& model, std::span<const std::size_t> states,
                                   std::size_t order, TruncationMode mode, const LocateOptions& options) {
  check_states(states);
  const std::size_t top = *std::max_element(states.begin(), states.end());
  const BandedOperator op = build_model(model, minimal_dim(top, order, 1));

  std::vector<EigenSeries> series;
  series.reserve(states.size());
  for (auto s : states) series.push_back(rs_series(op, s, order));
  const EsePolynomial ese = build_ese(series);
  const Polynomial disc = ese_discriminant(ese, mode);
  if (disc.degree() < 1) {
    throw Error(ErrorKind::NoExceptionalPoint,
                "discriminant is constant at order " + std::to_string(order) + "; no exceptional point");
  }

  RootOptions root_options;
  root_options.precision_bits = options.precision_bits;
  root_options.seed = options.seed;
  const RootSet roots = find_roots(disc, root_options);
  const std::vector<Complex> closest = smallest_modulus_roots(roots, options.exclude_zero_tol);

  PrecisionGuard guard(options.precision_bits);
  ExceptionalPointEstimate est;
  est.order = order;
  est.states.assign(states.begin(), states.end());
  est.mode = mode;
  est.precision_bits = options.precision_bits;
  est.discriminant_degree = disc.degree();
  est.lambda_p = closest.front();
  est.modulus = abs(est.lambda_p);
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    if (roots.roots[i].re == est.lambda_p.re && roots.roots[i].im == est.lambda_p.im) {
      est.discriminant_residual = roots.residuals[i];
    }
  }

  est.w_roots = ese_roots_in_w(ese, est.lambda_p, root_options);
  Real gap(-1);
  for (std::size_t i = 0; i < est.w_roots.size(); ++i) {
    for (std::size_t j = i + 1; j < est.w_roots.size(); ++j) {
      const Real d = abs(est.w_roots[i] - est.w_roots[j]);
      if (gap < 0 || d < gap) gap = d;
    }
  }
  est.coalescence_gap = gap;
  est.coalesced = gap <= options.gap_threshold;
  return est;
}

std::vector<EpTableRow> ep_table(const ModelSpec& model, std::span<const std::size_t> states,
                                 std::span<const std::size_t> orders, TruncationMode mode,
                                 const LocateOptions& options) {
  if (orders.empty()) throw Error(ErrorKind::InvalidArgument, "empty order range");
  if (!std::is_sorted(orders.begin(), orders.end())) {
    throw Error(ErrorKind::InvalidArgument, "order range must be ascending");
  }
  std::vector<EpTableRow> rows;
  rows.reserve(orders.size());
  for (auto k : orders) {
    EpTableRow row;
    row.order = k;
    try {
      row.estimate = locate_ep(model, states, k, mode, options);
    } catch (const Error& e) {
      row.error_kind = e.kind();
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> oracle_eigenvalues(const ModelSpec& model, double lambda, std::size_t dim,
                                       std::size_t count) {
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "oracle needs count >= 1");
  if (model.kind == ModelKind::Generic) {
    const BandedOperator op = build_generic(model);
    if (count > op.dim()) throw Error(ErrorKind::DimensionTooSmall, "more eigenvalues requested than dim");
    return lowest_eigenvalues(op, lambda, count);
  }

  constexpr std::size_t kMargin = 2;
  if (dim < count + kMargin) {
    throw Error(ErrorKind::DimensionTooSmall, "oracle dimension " + std::to_string(dim) + " too small for " +
                                                  std::to_string(count) + " eigenvalues");
  }
  const std::vector<double> values = lowest_eigenvalues(build_mathieu(model.kind, dim), lambda, count);
  const std::vector<double> check = lowest_eigenvalues(build_mathieu(model.kind, dim + 10), lambda, count);
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(values[i] - check[i]) > 1e-10 * std::max(1.0, std::abs(values[i]))) {
      throw Error(ErrorKind::OracleConvergence,
                  "eigenvalue " + std::to_string(i + 1) + " not converged in dimension " + std::to_string(dim));
    }
  }
  return values;
}

std::string to_string(RadiusEstimate::Method method) {
  switch (method) {
    case RadiusEstimate::Method::DombSykes: return "domb-sykes";
    case RadiusEstimate::Method::ConjugatePair: return "conjugate-pair-ratio";
    case RadiusEstimate::Method::RootTest: return "root-test";
  }
  return "unknown";
}

RadiusEstimate estimate_radius(const EigenSeries& es) {
  const auto coeffs = es.series.coeffs();
  const std::size_t order = es.series.order();
  if (order < 6) throw Error(ErrorKind::TooFewCoefficients, "radius estimate needs order >= 6");

  std::vector<double> c(order + 1);
  for (std::size_t j = 0; j <= order; ++j) c[j] = coeffs[j].to_double();

  std::vector<std::pair<double, double>> root_pts;
  for (std::size_t j = 1; j <= order; ++j) {
    if (c[j] != 0.0) {
      root_pts.emplace_back(1.0 / static_cast<double>(j), std::pow(std::abs(c[j]), -1.0 / static_cast<double>(j)));
    }
  }
  if (root_pts.size() < 4) {
    throw Error(ErrorKind::TooFewCoefficients, "radius estimate needs at least four nonzero coefficients");
  }

  RadiusEstimate out;
  out.root_test = fit_line(root_pts, tail_size(root_pts.size())).intercept;

  std::vector<std::pair<double, double>> ratio_pts;
  for (std::size_t j = 2; j <= order; ++j) {
    if (c[j] != 0.0 && c[j - 1] != 0.0) ratio_pts.emplace_back(1.0 / static_cast<double>(j), c[j] / c[j - 1]);
  }
  const std::size_t tail = tail_size(ratio_pts.size());
  bool sign_regular = ratio_pts.size() >= 3;
  for (std::size_t i = ratio_pts.size() - std::min(tail, ratio_pts.size()); i + 1 < ratio_pts.size(); ++i) {
    if ((ratio_pts[i].second > 0.0) != (ratio_pts[i + 1].second > 0.0)) sign_regular = false;
  }

  double ratio_all = 0.0;
  if (sign_regular) {
    const Fit tail_fit = fit_line(ratio_pts, tail);
    out.method = RadiusEstimate::Method::DombSykes;
    out.ratio_fit = 1.0 / std::abs(tail_fit.intercept);
    ratio_all = 1.0 / std::abs(fit_line(ratio_pts, ratio_pts.size()).intercept);
  } else {
    std::vector<std::pair<double, double>> pair_pts;
    for (std::size_t j = 2; j + 1 <= order; ++j) {
      const double num = c[j] * c[j] - c[j + 1] * c[j - 1];
      const double den = c[j - 1] * c[j - 1] - c[j] * c[j - 2];
      if (den != 0.0 && num / den > 0.0) pair_pts.emplace_back(1.0 / static_cast<double>(j), num / den);
    }
    if (pair_pts.size() >= 3) {
      const Fit tail_fit = fit_line(pair_pts, tail_size(pair_pts.size()));
      const Fit all_fit = fit_line(pair_pts, pair_pts.size());
      if (tail_fit.intercept > 0.0) {
        out.method = RadiusEstimate::Method::ConjugatePair;
        out.ratio_fit = 1.0 / std::sqrt(tail_fit.intercept);
        ratio_all = all_fit.intercept > 0.0 ? 1.0 / std::sqrt(all_fit.intercept) : out.ratio_fit;
      }
    }
  }

  if (out.method == RadiusEstimate::Method::RootTest) {
    out.radius = out.root_test;
    out.uncertainty = std::abs(out.root_test - root_pts.back().second);
  } else {
    out.radius = out.ratio_fit;
    out.uncertainty = std::max(std::abs(out.ratio_fit - out.root_test), std::abs(out.ratio_fit - ratio_all));
  }
  return out;
}

}  // namespace secular
