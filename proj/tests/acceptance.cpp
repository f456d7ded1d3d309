// Acceptance checks for the exact series, the exceptional-point table and the
// supporting property suites. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "secular/eplocate.hpp"
#include "secular/error.hpp"
#include "secular/resultant.hpp"
#include "test_helpers.hpp"

using namespace secular;
using Clock = std::chrono::steady_clock;

namespace {

double to_d(const Real& x) { return x.convert_to<double>(); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ModelSpec two_pi_even() {
  ModelSpec spec;
  spec.kind = ModelKind::Mathieu2PiEven;
  return spec;
}

const std::vector<std::size_t> kPair{1, 2};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome series_reproduction() {
  const auto start = Clock::now();
  const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(2, 4, 1));
  const auto e1 = rs_series(op, 1, 4).series;
  const auto e2 = rs_series(op, 2, 4).series;
  const double t = seconds_since(start);
  const std::vector<Rational> want1{Rational(1), Rational(1), Rational(-1, 8), Rational(-1, 64), Rational(-1, 1536)};
  const std::vector<Rational> want2{Rational(9), Rational(0), Rational(1, 16), Rational(1, 64), Rational(13, 20480)};
  const bool exact = e1 == TruncatedSeries(want1) && e2 == TruncatedSeries(want2);
  std::ostringstream d;
  d << (exact ? "exact match" : "coefficient mismatch") << ", " << t << " s";
  return {exact && t < 1.0, d.str()};
}

struct TableRow {
  std::size_t order;
  double modulus, re, im;
};

constexpr TableRow kTable[] = {
    {10, 3.769959083, 1.931394919, 3.237638825},
    {11, 3.769957228, 1.931392571, 3.237638065},
    {12, 3.769957375, 1.931392656, 3.237638186},
    {13, 3.769957431, 1.931392443, 3.237638378},
};

Outcome table_reproduction() {
  std::ostringstream d;
  bool any_mode = false;
  for (auto mode : {TruncationMode::Full, TruncationMode::TruncateAfter}) {
    const auto start = Clock::now();
    const std::vector<std::size_t> orders{10, 11, 12, 13};
    const auto rows = ep_table(two_pi_even(), kPair, orders, mode);
    const double t = seconds_since(start);
    double worst = 0;
    bool complete = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].estimate) {
        complete = false;
        continue;
      }
      const auto& e = *rows[i].estimate;
      worst = std::max({worst, std::abs(to_d(e.modulus) - kTable[i].modulus),
                        std::abs(to_d(e.lambda_p.re) - kTable[i].re), std::abs(to_d(e.lambda_p.im) - kTable[i].im)});
    }
    const bool ok = complete && worst <= 5e-9 && t < 60.0;
    any_mode = any_mode || ok;
    d << to_string(mode) << ": max dev " << worst << ", " << t << " s" << (ok ? " (ok)" : "") << "; ";
  }
  return {any_mode, d.str()};
}

Outcome reference_convergence() {
  const double reference = 3.769957494;
  const double d10 = std::abs(to_d(locate_ep(two_pi_even(), kPair, 10).modulus) - reference);
  const double d13 = std::abs(to_d(locate_ep(two_pi_even(), kPair, 13).modulus) - reference);
  std::ostringstream d;
  d << "K=13 dev " << d13 << ", K=10 dev " << d10;
  return {d13 <= 1e-7 && d13 < d10, d.str()};
}

Outcome oracle_equivalence() {
  const std::size_t dim = 30;
  const auto oracle = oracle_eigenvalues(two_pi_even(), 0.1, dim, 2);
  const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(2, 13, 1));
  PrecisionGuard guard(kDefaultPrecisionBits);
  const Complex lambda{to_real(Rational(1, 10).value()), Real(0)};
  double worst = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    const double s = to_d(evaluate(rs_series(op, n, 13).series, lambda).re);
    worst = std::max(worst, std::abs(s - oracle[n - 1]));
  }
  std::ostringstream d;
  d << "M=" << dim << ", max |delta| " << worst;
  return {worst <= 1e-8, d.str()};
}

Outcome coalescence() {
  const auto e = locate_ep(two_pi_even(), kPair, 13);
  const double gap = to_d(e.coalescence_gap);
  const double unperturbed = 8.0;
  std::ostringstream d;
  d << "W gap " << gap << " vs unperturbed " << unperturbed;
  return {gap <= 1e-4 && gap <= unperturbed * 1e-4, d.str()};
}

bool ring_laws() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> order_dist(0, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = order_dist(rng);
    const auto a = testing::random_series(rng, k);
    const auto b = testing::random_series(rng, k);
    const auto c = testing::random_series(rng, k);
    if ((a + b) + c != a + (b + c) || a + b != b + a) return false;
    if ((a * b) * c != a * (b * c) || a * b != b * a) return false;
    if (a * (b + c) != a * b + a * c) return false;
  }
  return true;
}

bool resultant_oracle() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> degree(1, 3);
  auto make = [&](int deg) {
    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = coeff(rng);
    while (c.back() == 0.0) c.back() = coeff(rng);
    return c;
  };
  auto to_w = [](const std::vector<double>& c) {
    std::vector<Polynomial> out;
    for (double x : c) out.push_back(Polynomial::constant(Rational(static_cast<long>(x))));
    return WPolynomial(std::move(out));
  };
  for (int trial = 0; trial < 120; ++trial) {
    const auto fc = make(degree(rng));
    const auto gc = make(degree(rng));
    const Polynomial res = resultant(to_w(fc), to_w(gc));
    std::complex<double> expected = std::pow(fc.back(), static_cast<double>(gc.size() - 1));
    for (const auto& r : testing::companion_roots(fc)) expected *= testing::horner(gc, r);
    const double got = res.is_zero() ? 0.0 : res.coeff(0).to_double();
    const double tol = 1e-6 * (1.0 + std::abs(expected));
    if (res.degree() > 0 || std::abs(expected.imag()) > tol || std::abs(got - expected.real()) > tol) return false;
  }
  return true;
}

bool conjugate_closure() {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, 12);
    if (p.degree() < 1) continue;
    RootOptions options;
    options.precision_bits = trial % 2 == 0 ? 128 : 200;
    const RootSet rs = find_roots(p, options);
    PrecisionGuard guard(options.precision_bits);
    const Real tol = boost::multiprecision::pow(Real(10), Real(-decimal_digits(options.precision_bits) / 2.0));
    if (rs.roots.size() != static_cast<std::size_t>(p.degree()) || conjugate_closure_defect(rs) > tol) return false;
  }
  // The discriminant roots used for the table must close as well.
  for (std::size_t k : {10u, 13u}) {
    const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(2, k, 1));
    const std::vector<EigenSeries> s{rs_series(op, 1, k), rs_series(op, 2, k)};
    const RootSet rs = find_roots(ese_discriminant(build_ese(s)));
    PrecisionGuard guard(rs.precision_bits);
    if (conjugate_closure_defect(rs) > boost::multiprecision::pow(Real(10), Real(-decimal_digits(rs.precision_bits) / 2.0)))
      return false;
  }
  return true;
}

bool m_stability() {
  for (auto kind : {ModelKind::Mathieu2PiEven, ModelKind::Mathieu2PiOdd, ModelKind::MathieuPiEven,
                    ModelKind::MathieuPiOdd}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k : {0u, 3u, 8u, 13u}) {
        const std::size_t m = minimal_dim(n, k, 1);
        if (rs_series(build_mathieu(kind, m), n, k).series != rs_series(build_mathieu(kind, m + 5), n, k).series)
          return false;
      }
    }
  }
  return true;
}

bool permutation_invariance() {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<EigenSeries> s;
    for (std::size_t i = 0; i < 4; ++i) s.push_back({i + 1, testing::random_series(rng, 5)});
    const auto reference = build_ese(s).p;
    std::vector<std::size_t> perm{0, 1, 2, 3};
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<EigenSeries> shuffled;
      for (auto i : perm) shuffled.push_back(s[i]);
      if (build_ese(shuffled).p != reference) return false;
    }
  }
  return true;
}

Outcome property_suites() {
  const std::pair<const char*, std::function<bool()>> suites[] = {
      {"ring laws x1000", ring_laws},
      {"resultant vs roots x120", resultant_oracle},
      {"conjugate closure", conjugate_closure},
      {"M-stability", m_stability},
      {"permutation invariance", permutation_invariance},
  };
  bool all = true;
  std::ostringstream d;
  for (const auto& [name, fn] : suites) {
    const bool ok = fn();
    all = all && ok;
    d << name << (ok ? " ok" : " FAILED") << "; ";
  }
  return {all, d.str()};
}

Outcome radius_cross_check() {
  const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(1, 13, 1));
  const auto r = estimate_radius(rs_series(op, 1, 13));
  const double target = 3.7699575;
  const double rel = std::abs(r.radius - target) / target;
  std::ostringstream d;
  d << "radius " << r.radius << " +- " << r.uncertainty << " (" << to_string(r.method) << "), rel dev " << rel;
  return {rel <= 0.10, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"exact series reproduction", series_reproduction},
      {"exceptional-point table reproduction", table_reproduction},
      {"reference convergence", reference_convergence},
      {"oracle equivalence", oracle_equivalence},
      {"coalescence", coalescence},
      {"property suites", property_suites},
      {"radius cross-check", radius_cross_check},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
