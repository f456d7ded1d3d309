#include <cmath>

#include <Eigen/Dense>

#include "doctest.h"
#include "secular/eplocate.hpp"
#include "secular/error.hpp"

using namespace secular;

namespace {

struct Eq5Row {
  std::size_t order;
  double modulus;
  double re;
  double im;
};

// Printed values for the lowest 2pi-even pair.
constexpr Eq5Row kTable[] = {
    {10, 3.769959083, 1.931394919, 3.237638825},
    {11, 3.769957228, 1.931392571, 3.237638065},
    {12, 3.769957375, 1.931392656, 3.237638186},
    {13, 3.769957431, 1.931392443, 3.237638378},
};

const std::vector<std::size_t> kPair{1, 2};

ModelSpec mathieu(ModelKind kind = ModelKind::Mathieu2PiEven) {
  ModelSpec spec;
  spec.kind = kind;
  return spec;
}

double to_d(const Real& x) { return x.convert_to<double>(); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("exceptional point of the lowest 2pi-even pair") {
  for (const auto& row : kTable) {
    CAPTURE(row.order);
    const auto e = locate_ep(mathieu(), kPair, row.order);
    CHECK(std::abs(to_d(e.modulus) - row.modulus) <= 5e-9);
    CHECK(std::abs(to_d(e.lambda_p.re) - row.re) <= 5e-9);
    CHECK(std::abs(to_d(e.lambda_p.im) - row.im) <= 5e-9);
    CHECK(e.lambda_p.im > 0);
    CHECK(e.coalesced);
    CHECK(to_d(e.coalescence_gap) < 1e-4);
    CHECK(e.discriminant_degree == static_cast<int>(2 * row.order));
  }
}

TEST_CASE("order zero has no exceptional point") {
  CHECK(kind_of([] { locate_ep(mathieu(), kPair, 0); }) == ErrorKind::NoExceptionalPoint);
}

TEST_CASE("bad state lists") {
  const std::vector<std::size_t> one{1};
  const std::vector<std::size_t> dup{2, 2};
  const std::vector<std::size_t> zero{0, 1};
  CHECK(kind_of([&] { locate_ep(mathieu(), one, 4); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { locate_ep(mathieu(), dup, 4); }) == ErrorKind::DuplicateState);
  CHECK(kind_of([&] { locate_ep(mathieu(), zero, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("ep_table rows") {
  const std::vector<std::size_t> orders{10, 11, 12, 13};
  const auto rows = ep_table(mathieu(), kPair, orders);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].estimate);
    CHECK(rows[i].order == orders[i]);
    CHECK(std::abs(to_d(rows[i].estimate->modulus) - 3.769957494) <= 2.2e-6);
  }

  const std::vector<std::size_t> zero{0};
  const auto failed = ep_table(mathieu(), kPair, zero);
  REQUIRE(failed.size() == 1);
  CHECK_FALSE(failed[0].estimate);
  CHECK(failed[0].error_kind == ErrorKind::NoExceptionalPoint);

  const std::vector<std::size_t> mixed{0, 4};
  const auto partly = ep_table(mathieu(), kPair, mixed);
  CHECK_FALSE(partly[0].estimate);
  CHECK(partly[1].estimate);

  const std::vector<std::size_t> descending{5, 4};
  CHECK(kind_of([&] { ep_table(mathieu(), kPair, descending); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { ep_table(mathieu(), kPair, std::vector<std::size_t>{}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("convergence toward the reference modulus") {
  const double reference = 3.769957494;
  const double d10 = std::abs(to_d(locate_ep(mathieu(), kPair, 10).modulus) - reference);
  const double d13 = std::abs(to_d(locate_ep(mathieu(), kPair, 13).modulus) - reference);
  CHECK(d13 < d10);
  CHECK(d13 <= 1e-7);
}

TEST_CASE("conjugate partner is among the discriminant roots") {
  const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(2, 12, 1));
  const std::vector<EigenSeries> s{rs_series(op, 1, 12), rs_series(op, 2, 12)};
  const RootSet roots = find_roots(ese_discriminant(build_ese(s)));
  const auto e = locate_ep(mathieu(), kPair, 12);
  PrecisionGuard guard(128);
  bool found = false;
  for (const auto& z : roots.roots) found = found || abs(z - conj(e.lambda_p)) < 1e-30;
  CHECK(found);
}

TEST_CASE("three-state model space: one pair coalesces, the third root stays away") {
  const std::vector<std::size_t> three{1, 2, 3};
  const auto e = locate_ep(mathieu(), three, 10);
  REQUIRE(e.w_roots.size() == 3);
  std::vector<double> gaps;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) gaps.push_back(to_d(abs(e.w_roots[i] - e.w_roots[j])));
  }
  std::sort(gaps.begin(), gaps.end());
  CHECK(gaps[0] * 100 < gaps[1]);
  CHECK(e.coalesced);
  CHECK(std::abs(to_d(e.modulus) - 3.7699575) < 1e-3);
}

TEST_CASE("truncate-after mode is available and close") {
  const auto e = locate_ep(mathieu(), kPair, 13, TruncationMode::TruncateAfter);
  CHECK(e.mode == TruncationMode::TruncateAfter);
  CHECK(std::abs(to_d(e.modulus) - 3.769957494) < 1e-6);
  CHECK(e.discriminant_degree <= 13);
}

TEST_CASE("generic finite models go through the same pipeline") {
  ModelSpec toy;
  toy.kind = ModelKind::Generic;
  toy.diag0 = {"1", "2", "3"};
  toy.bands = {{1, {"1", "1"}}, {-1, {"1", "1"}}};
  const auto e = locate_ep(toy, kPair, 8);
  CHECK(e.coalesced);
  CHECK(to_d(e.modulus) > 0.1);
}

TEST_CASE("oracle eigenvalues") {
  SUBCASE("zero coupling returns diag0") {
    const auto v = oracle_eigenvalues(mathieu(ModelKind::MathieuPiEven), 0.0, 20, 3);
    CHECK(v == std::vector<double>{0.0, 4.0, 16.0});
  }
  SUBCASE("agrees with the order-13 partial sums at lambda = 0.1") {
    const auto v = oracle_eigenvalues(mathieu(), 0.1, 30, 2);
    const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(2, 13, 1));
    for (std::size_t n = 1; n <= 2; ++n) {
      const double s = to_d(evaluate(rs_series(op, n, 13).series, Complex(0.1)).re);
      CHECK(std::abs(s - v[n - 1]) < 1e-8);
    }
  }
  SUBCASE("asymmetric pi-even matches the symmetric sqrt(2) form") {
    const std::size_t m = 30;
    const auto v = oracle_eigenvalues(mathieu(ModelKind::MathieuPiEven), 0.5, m, 4);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t k = 0; k < m; ++k) {
      a(k, k) = 4.0 * k * k;
      if (k + 1 < m) a(k, k + 1) = a(k + 1, k) = 0.5 * (k == 0 ? std::sqrt(2.0) : 1.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(v[i] - es.eigenvalues()[i]) < 1e-10);
  }
  SUBCASE("dimension errors") {
    CHECK(kind_of([] { oracle_eigenvalues(mathieu(), 0.1, 3, 2); }) == ErrorKind::DimensionTooSmall);
    CHECK(kind_of([] { oracle_eigenvalues(mathieu(), 200.0, 6, 2); }) == ErrorKind::OracleConvergence);
    CHECK(kind_of([] { oracle_eigenvalues(mathieu(), 0.1, 30, 0); }) == ErrorKind::InvalidArgument);
  }
  SUBCASE("generic models use their own dimension") {
    ModelSpec toy;
    toy.kind = ModelKind::Generic;
    toy.diag0 = {"1", "2", "3"};
    toy.bands = {{1, {"1", "1"}}, {-1, {"1", "1"}}};
    const auto v = oracle_eigenvalues(toy, 1.0, 0, 3);
    // Eigenvalues of [[1,1,0],[1,2,1],[0,1,3]]: 2 and 2 +- sqrt(3).
    CHECK(std::abs(v[0] - (2 - std::sqrt(3.0))) < 1e-12);
    CHECK(std::abs(v[1] - 2.0) < 1e-12);
    CHECK(std::abs(v[2] - (2 + std::sqrt(3.0))) < 1e-12);
  }
}

TEST_CASE("radius estimates") {
  SUBCASE("Mathieu E1 at order 13") {
    const auto op = build_mathieu(ModelKind::Mathieu2PiEven, minimal_dim(1, 13, 1));
    const auto r = estimate_radius(rs_series(op, 1, 13));
    CHECK(r.method == RadiusEstimate::Method::ConjugatePair);
    CHECK(std::abs(r.radius - 3.7699575) <= 0.1 * 3.7699575);
    const double ep = to_d(locate_ep(mathieu(), kPair, 13).modulus);
    CHECK(std::abs(r.radius - ep) <= r.uncertainty);
  }
  SUBCASE("geometric series 1 / (1 - lambda/2)") {
    std::vector<Rational> c;
    for (long j = 0; j <= 12; ++j) c.push_back(Rational(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(j)));
    const auto r = estimate_radius(EigenSeries{1, TruncatedSeries(c)});
    CHECK(r.method == RadiusEstimate::Method::DombSykes);
    CHECK(std::abs(r.radius - 2.0) < 1e-6);
    CHECK(std::abs(r.root_test - 2.0) < 1e-6);
  }
  SUBCASE("alternating geometric series 1 / (1 + lambda/3)") {
    std::vector<Rational> c;
    mpz_class p = 1;
    for (long j = 0; j <= 12; ++j) {
      c.push_back(Rational(mpz_class(j % 2 == 0 ? 1 : -1), p));
      p *= 3;
    }
    const auto r = estimate_radius(EigenSeries{1, TruncatedSeries(c)});
    CHECK(std::abs(r.radius - 3.0) < 1e-6);
  }
  SUBCASE("log(1 - lambda/5) has a branch point at 5") {
    std::vector<Rational> c{0};
    mpz_class p = 5;
    for (long j = 1; j <= 16; ++j) {
      c.push_back(Rational(mpz_class(-1), mpz_class(p * j)));
      p *= 5;
    }
    const auto r = estimate_radius(EigenSeries{1, TruncatedSeries(c)});
    CHECK(r.method == RadiusEstimate::Method::DombSykes);
    CHECK(std::abs(r.radius - 5.0) < 1e-6);
  }
  SUBCASE("errors") {
    std::vector<Rational> tail_zero{1, 1, 0, 0, 0, 0, 0, 0};
    CHECK(kind_of([&] { estimate_radius(EigenSeries{1, TruncatedSeries(tail_zero)}); }) ==
          ErrorKind::TooFewCoefficients);
    std::vector<Rational> short_series{1, 1, 1, 1};
    CHECK(kind_of([&] { estimate_radius(EigenSeries{1, TruncatedSeries(short_series)}); }) ==
          ErrorKind::TooFewCoefficients);
  }
}
