#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "brr/disk_maps.hpp"
#include "brr/series.hpp"
#include "cauchy_oracle.hpp"

using brr::cplx;
using brr::Series;

TEST_CASE("moebius_extremal: coefficients, Wiener equality, domain errors") {
  const Series f0 = brr::moebius_extremal(0.0, 3);
  CHECK(f0.coeffs[0] == cplx{0.0, 0.0});
  CHECK(f0.coeffs[1] == cplx{-1.0, 0.0});
  CHECK(f0.coeffs[2] == cplx{0.0, 0.0});
  CHECK(f0.coeffs[3] == cplx{0.0, 0.0});

  const Series f = brr::moebius_extremal(0.5, 3);
  CHECK(f.coeffs[0].real() == doctest::Approx(0.5));
  CHECK(f.coeffs[1].real() == doctest::Approx(-0.75));
  CHECK(f.coeffs[2].real() == doctest::Approx(-0.375));
  CHECK(f.coeffs[3].real() == doctest::Approx(-0.1875));
  CHECK(f.self_map);

  // The first coefficient attains the Wiener bound 1 - a^2.
  const Series g = brr::moebius_extremal(0.9, 10);
  CHECK(std::abs(g.coeffs[1]) == doctest::Approx(0.19).epsilon(1e-14));

  CHECK_THROWS_AS(brr::moebius_extremal(1.0, 5), std::domain_error);
  CHECK_THROWS_AS(brr::moebius_extremal(-0.1, 5), std::domain_error);
}

TEST_CASE("moebius_extremal at z = -r matches (r+a)/(1+ar)") {
  for (double a : {0.1, 0.5, 0.9, 0.99}) {
    const Series f = brr::moebius_extremal(a, 200);
    for (double r : {0.1, 0.3, 0.6}) {
      const double direct = (r + a) / (1.0 + a * r);
      const double via_series = std::abs(brr::eval(f, cplx{-r, 0.0}));
      CHECK(std::abs(via_series - direct) <= *f.tail_bound(r) + 1e-13);
    }
  }
}

TEST_CASE("reflected_moebius: coefficients and identity case") {
  const Series id = brr::reflected_moebius(0.0, 3);
  CHECK(id.coeffs[0] == cplx{0.0, 0.0});
  CHECK(id.coeffs[1] == cplx{1.0, 0.0});
  CHECK(id.coeffs[2] == cplx{0.0, 0.0});

  const Series f = brr::reflected_moebius(0.5, 4);
  CHECK(f.coeffs[1].real() == doctest::Approx(0.75));   // 1 - a^2
  CHECK(f.coeffs[2].real() == doctest::Approx(-0.375)); // alternating sign
  CHECK(f.coeffs[3].real() == doctest::Approx(0.1875));

  // Evaluation at +r matches (r+a)/(1+ar).
  const Series g = brr::reflected_moebius(0.7, 200);
  const double r = 0.4;
  CHECK(std::abs(brr::eval(g, cplx{r, 0.0})) ==
        doctest::Approx((r + 0.7) / (1.0 + 0.7 * r)).epsilon(1e-12));
}

TEST_CASE("koebe and half_plane expansions") {
  const Series k = brr::koebe(4);
  for (int i = 0; i <= 4; ++i) CHECK(k.coeffs[i].real() == doctest::Approx(double(i)));
  CHECK_FALSE(k.self_map);

  const Series h = brr::half_plane(3);
  CHECK(h.coeffs[0] == cplx{0.0, 0.0});
  for (int i = 1; i <= 3; ++i) CHECK(h.coeffs[i] == cplx{1.0, 0.0});
  CHECK_FALSE(h.self_map);

  // Koebe tail majorant certifies the dropped coefficients k > M.
  REQUIRE(k.tail.has_value());
  for (int i = 1; i <= 50; ++i) {
    const double claimed = k.tail->first * std::pow(k.tail->ratio, i - 1);
    CHECK(claimed >= 4 + i);  // |a_{M+i}| = M + i
  }
}

TEST_CASE("blaschke_product: degree-1 real zero reduces to the automorphism") {
  brr::BlaschkeSpec spec;
  spec.zeros = {cplx{0.6, 0.0}};
  const Series b = brr::blaschke_product(spec, 50);
  const Series m = brr::moebius_extremal(0.6, 50);
  for (int k = 0; k <= 50; ++k) CHECK(std::abs(b.coeffs[k] - m.coeffs[k]) < 1e-12);
  CHECK(b.self_map);
}

TEST_CASE("blaschke_product: double zero at origin gives z^2") {
  brr::BlaschkeSpec spec;
  spec.zeros = {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
  const Series b = brr::blaschke_product(spec, 10);
  for (int k = 0; k <= 10; ++k) {
    const double expect = k == 2 ? 1.0 : 0.0;  // (-z)(-z) = +z^2
    CHECK(std::abs(b.coeffs[k] - expect) < 1e-15);
  }
}

TEST_CASE("blaschke_product: zeros {0.5,-0.5} against exact expansion and oracle") {
  brr::BlaschkeSpec spec;
  spec.zeros = {cplx{0.5, 0.0}, cplx{-0.5, 0.0}};
  const Series b = brr::blaschke_product(spec, 12);

  // (z^2 - 1/4)/(1 - z^2/4): a_0 = -1/4, a_{2j} = (15/16) 4^{-(j-1)}, odd 0.
  CHECK(b.coeffs[0].real() == doctest::Approx(-0.25).epsilon(1e-14));
  for (int j = 1; 2 * j <= 12; ++j)
    CHECK(b.coeffs[2 * j].real() ==
          doctest::Approx(15.0 / 16.0 * std::pow(0.25, j - 1)).epsilon(1e-13));
  for (int k = 1; k <= 12; k += 2) CHECK(std::abs(b.coeffs[k]) < 1e-14);

  // Cauchy-integral trapezoid oracle on |z| = 0.5.
  const auto hat = oracle::cauchy_coeffs(
      [&](cplx z) { return oracle::blaschke_eval(spec.zeros, spec.unimodular_factor, z); }, 10, 0.5);
  for (int k = 0; k <= 10; ++k) CHECK(std::abs(b.coeffs[k] - hat[k]) < 1e-8);
}

TEST_CASE("blaschke_product: invariants rejected on bad input") {
  brr::BlaschkeSpec bad;
  bad.zeros = {cplx{1.0, 0.0}};
  CHECK_THROWS_AS(brr::blaschke_product(bad, 10), std::domain_error);

  brr::BlaschkeSpec nonunit;
  nonunit.zeros = {cplx{0.3, 0.0}};
  nonunit.unimodular_factor = 0.5;
  CHECK_THROWS_AS(brr::blaschke_product(nonunit, 10), std::domain_error);
}

TEST_CASE("random_self_map: determinism, Wiener, degree-1 equality") {
  const Series a = brr::random_self_map(1234, 3);
  const Series b = brr::random_self_map(1234, 3);
  REQUIRE(a.order() == b.order());
  for (int k = 0; k <= a.order(); ++k) CHECK(a.coeffs[k] == b.coeffs[k]);
  const Series c = brr::random_self_map(1235, 3);
  CHECK(a.coeffs[1] != c.coeffs[1]);

  // Wiener bound on every sampled map.
  for (std::uint64_t seed : {7ull, 8ull, 9ull, 10ull}) {
    for (int deg = 1; deg <= 5; ++deg) {
      const Series f = brr::random_self_map(seed, deg, 100);
      const double w = 1.0 - std::norm(f.coeffs[0]);
      for (int k = 1; k <= f.order(); ++k) CHECK(std::abs(f.coeffs[k]) <= w + 1e-12);
    }
  }

  // Degree 1: |a_1| attains 1 - |a_0|^2 exactly.
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Series f = brr::random_self_map(seed, 1, 50);
    CHECK(std::abs(f.coeffs[1]) ==
          doctest::Approx(1.0 - std::norm(f.coeffs[0])).epsilon(1e-12));
  }

  // Classical Bohr property at r = 1/3 on sampled maps.
  for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
    const Series f = brr::random_self_map(seed, 4);
    CHECK(brr::bohr_sum(f, 1.0 / 3.0).value <= 1.0 + 1e-9);
  }
}

TEST_CASE("random blaschke coefficients agree with the Cauchy oracle") {
  for (int t = 0; t < 10; ++t) {
    const std::uint64_t seed = 500 + t;
    const int degree = 1 + t % 5;
    const auto spec = brr::random_blaschke_spec(seed, degree);
    const Series f = brr::blaschke_product(spec, 60);
    const auto hat = oracle::cauchy_coeffs(
        [&](cplx z) { return oracle::blaschke_eval(spec.zeros, spec.unimodular_factor, z); }, 20,
        0.6);
    for (int k = 0; k <= 20; ++k) CHECK(std::abs(f.coeffs[k] - hat[k]) < 1e-8);
  }
}
