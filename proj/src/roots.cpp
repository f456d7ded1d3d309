#include "secular/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace secular {

namespace {

using boost::multiprecision::pow;

struct Evaluation {
  Complex value;
  Complex derivative;
  /// Size of |p(z)| below which the iterate cannot be improved at the
  /// working precision.
  Real noise;
};

using Evaluator = std::function<Evaluation(const Complex&)>;

Real epsilon_for(unsigned bits) {
  return Real(boost::multiprecision::ldexp(Real(1), 1 - static_cast<int>(bits)));
}

/// Integer Horner evaluation of a rational polynomial at a dyadic complex
/// point. Coefficients are scaled by the lcm of their denominators; the point
/// (a + ib) / 2^s is handled homogeneously so that every step stays in Z[i].
class ExactEvaluator {
 public:
  ExactEvaluator(const Polynomial& p, Real eps) : eps_(std::move(eps)) {
    denominator_ = 1;
    for (const auto& c : p.coeffs()) {
      mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), c.value().get_den_mpz_t());
    }
    for (const auto& c : p.coeffs()) {
      values_.push_back(mpz_class(c.value() * denominator_));
      magnitudes_.push_back(boost::multiprecision::abs(to_real(c.value())));
    }
    for (std::size_t k = 1; k < values_.size(); ++k) derivs_.push_back(values_[k] * static_cast<unsigned long>(k));
  }

  Evaluation operator()(const Complex& z) const {
    mpz_class a;
    mpz_class b;
    unsigned long s = 0;
    split(z, a, b, s);
    Evaluation e{horner(values_, a, b, s), horner(derivs_, a, b, s), Real(0)};
    const Real r = abs(z);
    Real sum(0);
    for (auto it = magnitudes_.rbegin(); it != magnitudes_.rend(); ++it) sum = sum * r + *it;
    e.noise = 4 * eps_ * sum;
    return e;
  }

 private:
  static void split(const Complex& z, mpz_class& a, mpz_class& b, unsigned long& s) {
    mpz_class ma;
    mpz_class mb;
    long ea = 0;
    long eb = 0;
    const bool za = z.re == 0;
    const bool zb = z.im == 0;
    if (!za) ea = mpfr_get_z_2exp(ma.get_mpz_t(), z.re.backend().data());
    if (!zb) eb = mpfr_get_z_2exp(mb.get_mpz_t(), z.im.backend().data());
    if (za) ea = eb;
    if (zb) eb = ea;
    const long e = std::min(ea, eb);
    a = ma;
    b = mb;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(ea - e));
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(eb - e));
    if (e >= 0) {
      mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      s = 0;
    } else {
      s = static_cast<unsigned long>(-e);
    }
  }

  Complex horner(const std::vector<mpz_class>& c, const mpz_class& a, const mpz_class& b,
                 unsigned long s) const {
    if (c.empty()) return Complex();
    const std::size_t n = c.size() - 1;
    mpz_class re = c[n];
    mpz_class im = 0;
    mpz_class t;
    for (std::size_t k = n; k-- > 0;) {
      t = re * a - im * b;
      im = re * b + im * a;
      re = t;
      mpz_class term = c[k];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), s * (n - k));
      re += term;
    }
    mpz_class scale = denominator_;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), s * n);
    return Complex(to_real(mpq_class(re, scale)), to_real(mpq_class(im, scale)));
  }

  Real eps_;
  mpz_class denominator_;
  std::vector<mpz_class> values_;
  std::vector<mpz_class> derivs_;
  std::vector<Real> magnitudes_;
};

class HornerEvaluator {
 public:
  HornerEvaluator(std::vector<Complex> coeffs, Real eps) : coeffs_(std::move(coeffs)), eps_(std::move(eps)) {
    for (const auto& c : coeffs_) magnitudes_.push_back(abs(c));
  }

  Evaluation operator()(const Complex& z) const {
    Complex p;
    Complex dp;
    Real sum(0);
    const Real r = abs(z);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + coeffs_[k];
      sum = sum * r + magnitudes_[k];
    }
    const Real n(static_cast<double>(coeffs_.size()));
    return {p, dp, Real(4 * n * eps_ * sum)};
  }

 private:
  std::vector<Complex> coeffs_;
  Real eps_;
  std::vector<Real> magnitudes_;
};

/// Fujiwara bound: every root satisfies |z| <= 2 max |a_{n-k}/a_n|^(1/k),
/// with the constant term halved.
Real fujiwara_bound(const std::vector<Real>& magnitudes) {
  const std::size_t n = magnitudes.size() - 1;
  const Real& lead = magnitudes[n];
  Real bound(0);
  for (std::size_t k = 1; k <= n; ++k) {
    Real ratio = magnitudes[n - k] / lead;
    if (k == n) ratio /= 2;
    if (ratio == 0) continue;
    const Real root = pow(ratio, Real(1) / Real(static_cast<double>(k)));
    if (root > bound) bound = root;
  }
  return Real(2 * bound);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::vector<std::size_t>> find_clusters(const std::vector<Complex>& roots, unsigned bits) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  const Real tol(cluster_tolerance(bits));
  for (std::size_t i = 0; i < n; ++i) {
    const Real scale = boost::multiprecision::max(Real(1), abs(roots[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(roots[i] - roots[j]) <= tol * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> clusters;
  for (auto& g : groups) {
    if (g.size() >= 2) clusters.push_back(std::move(g));
  }
  return clusters;
}

/// Aberth-Ehrlich iteration on the polynomial with the given coefficient
/// magnitudes (lowest power first, nonzero constant term) and evaluator.
RootSet aberth(const std::vector<Real>& magnitudes, const Evaluator& eval, const RootOptions& options) {
  const std::size_t n = magnitudes.size() - 1;
  const Real eps = epsilon_for(options.precision_bits);
  const Real radius = fujiwara_bound(magnitudes);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();

  std::mt19937_64 rng(options.seed);
  const double phase = uniform01(rng);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real theta = two_pi * (Real(static_cast<double>(k)) + phase + 0.3 * (uniform01(rng) - 0.5)) /
                       Real(static_cast<double>(n));
    const Real r = radius * (0.9 + 0.2 * uniform01(rng));
    z[k] = Complex(Real(r * cos(theta)), Real(r * sin(theta)));
  }

  std::vector<bool> done(n, false);
  RootSet out;
  out.precision_bits = options.precision_bits;
  int sweep = 0;
  for (; sweep < options.max_iterations; ++sweep) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Evaluation e = eval(z[k]);
      if (abs(e.value) <= e.noise) {
        done[k] = true;
        continue;
      }
      all_done = false;
      Complex repulsion;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = z[k] - z[j];
        if (!is_zero(diff)) repulsion += Complex(1.0) / diff;
      }
      Complex correction;
      if (is_zero(e.derivative)) {
        // Stationary point: nudge off it.
        correction = Complex(Real(eps * radius), Real(eps * radius));
      } else {
        const Complex ratio = e.value / e.derivative;
        correction = ratio / (Complex(1.0) - ratio * repulsion);
      }
      z[k] -= correction;
      if (abs(correction) <= 2 * eps * abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }
  out.iterations = sweep;

  // Newton polish; keep a step only while it lowers the residual.
  for (std::size_t k = 0; k < n; ++k) {
    Evaluation e = eval(z[k]);
    for (int step = 0; step < 8 && !is_zero(e.value) && !is_zero(e.derivative); ++step) {
      const Complex delta = e.value / e.derivative;
      const Complex candidate = z[k] - delta;
      Evaluation ec = eval(candidate);
      if (abs(ec.value) >= abs(e.value)) break;
      z[k] = candidate;
      e = std::move(ec);
      if (abs(delta) <= eps * abs(z[k])) break;
    }
    out.residuals.push_back(abs(e.value));
  }
  out.roots = std::move(z);

  if (std::find(done.begin(), done.end(), false) != done.end()) {
    throw RootFindingError("root finder did not converge in " + std::to_string(options.max_iterations) +
                               " iterations",
                           std::move(out));
  }
  return out;
}

RootSet finish(RootSet found, std::size_t zero_roots, unsigned bits) {
  for (std::size_t i = 0; i < zero_roots; ++i) {
    found.roots.emplace_back(Complex(0.0));
    found.residuals.emplace_back(Real(0));
  }
  found.clusters = find_clusters(found.roots, bits);
  return found;
}

}  // namespace

double cluster_tolerance(unsigned precision_bits) {
  return std::ldexp(1.0, -static_cast<int>(precision_bits / 4));
}

RootSet find_roots(const Polynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root finding needs degree >= 1");
  PrecisionGuard guard(options.precision_bits);

  std::size_t zero_roots = 0;
  while (p.coeffs()[zero_roots].is_zero()) ++zero_roots;
  const Polynomial reduced(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(zero_roots),
                                                 p.coeffs().end()));
  RootSet found;
  found.precision_bits = options.precision_bits;
  if (reduced.degree() >= 1) {
    std::vector<Real> magnitudes;
    for (const auto& c : reduced.coeffs()) magnitudes.push_back(boost::multiprecision::abs(to_real(c.value())));
    const ExactEvaluator evaluator(reduced, epsilon_for(options.precision_bits));
    found = aberth(magnitudes, Evaluator(std::cref(evaluator)), options);
  }
  return finish(std::move(found), zero_roots, options.precision_bits);
}

RootSet find_roots(std::span<const Complex> coeffs, const RootOptions& options) {
  PrecisionGuard guard(options.precision_bits);
  std::vector<Complex> c;
  for (const auto& x : coeffs) c.emplace_back(Real(x.re), Real(x.im));
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.size() < 2) throw Error(ErrorKind::InvalidArgument, "root finding needs degree >= 1");

  std::size_t zero_roots = 0;
  while (is_zero(c[zero_roots])) ++zero_roots;
  c.erase(c.begin(), c.begin() + static_cast<long>(zero_roots));
  RootSet found;
  found.precision_bits = options.precision_bits;
  if (c.size() >= 2) {
    std::vector<Real> magnitudes;
    for (const auto& x : c) magnitudes.push_back(abs(x));
    const HornerEvaluator evaluator(std::move(c), epsilon_for(options.precision_bits));
    found = aberth(magnitudes, Evaluator(std::cref(evaluator)), options);
  }
  return finish(std::move(found), zero_roots, options.precision_bits);
}

std::vector<Complex> smallest_modulus_roots(const RootSet& rs, double exclude_zero_tol) {
  if (rs.roots.empty()) throw Error(ErrorKind::InvalidArgument, "empty root set");
  PrecisionGuard guard(rs.precision_bits);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (abs(rs.roots[i]) > exclude_zero_tol) candidates.push_back(i);
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::InvalidArgument, "every root lies within the zero-exclusion tolerance");
  }
  const auto least = *std::min_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return abs(rs.roots[a]) < abs(rs.roots[b]);
  });
  const Real min_modulus = abs(rs.roots[least]);
  const Real floor = boost::multiprecision::sqrt(epsilon_for(rs.precision_bits)) * min_modulus;

  std::vector<Complex> out;
  for (std::size_t i : candidates) {
    const Real tie = boost::multiprecision::max(
        Real(1000 * boost::multiprecision::max(rs.residuals[i], rs.residuals[least])), floor);
    if (abs(rs.roots[i]) - min_modulus <= tie) out.push_back(rs.roots[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) { return a.im > b.im; });
  return out;
}

Real conjugate_closure_defect(const RootSet& rs) {
  PrecisionGuard guard(rs.precision_bits);
  Real worst(0);
  for (const auto& z : rs.roots) {
    const Complex target = conj(z);
    Real best = -1;
    for (const auto& w : rs.roots) {
      const Real d = abs(target - w);
      if (best < 0 || d < best) best = d;
    }
    best /= boost::multiprecision::max(Real(1), abs(z));
    if (best > worst) worst = best;
  }
  return worst;
}

}  // namespace secular
