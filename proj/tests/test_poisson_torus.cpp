#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/poisson_torus.hpp"

using namespace signlab;

TEST_CASE("poisson residual vanishes for the gaussian") {
  auto g = make_closed_form(CFKind::Gaussian, 1);
  for (double alpha : {0.5, 1.0, 2.0})
    for (double beta : {0.0, 0.3, 0.5})
      CHECK(poisson_residual(g, alpha, beta) < 1e-10);
}

TEST_CASE("poisson residual vanishes for the tent") {
  auto tent = make_closed_form(CFKind::Tent);
  CHECK(poisson_residual(tent, 1.0, 0.0) < 1e-8);
  CHECK(poisson_residual(tent, 0.5, 0.25) < 1e-8);
}

TEST_CASE("poisson residual for the bandlimited minimizer") {
  auto f = make_prop1_minimizer();
  for (double alpha : {0.5, 1.0, 2.0})
    for (double beta : {0.0, 0.5, 1.0})
      CHECK(poisson_residual(f, alpha, beta) < 1e-8);
}

TEST_CASE("proposition-1 certificate") {
  auto f = make_prop1_minimizer();
  auto cert = prop1_certificate(f);
  CHECK(cert.passed);
  // not bandlimited to [-1/2, 1/2]: rejected outright
  CHECK_THROWS_AS(prop1_certificate(make_closed_form(CFKind::Tent)), Error);
}

TEST_CASE("interpolation from integer data") {
  // the dilated minimizer g(x) = f(2x+1) vanishes at the integers and has
  // derivative +2 at 0 and -2 at -1; type 2 pi, so the integer data determine g
  auto f = make_prop1_minimizer();
  auto g = vaaler_interpolate({}, {{0, 2.0}, {-1, -2.0}});
  for (int i = 0; i <= 60; ++i) {
    double x = -3.0 + 6.0 * i / 60.0;
    CHECK(g(x) == doctest::Approx(evaluate(f, 2.0 * x + 1.0))
                      .epsilon(1e-8).scale(1.0));
  }
  // node values reproduce the data exactly
  CHECK(g(0.0) == doctest::Approx(0.0));
  auto h = vaaler_interpolate({{1, 0.5}}, {});
  CHECK(h(1.0) == doctest::Approx(0.5));
}

TEST_CASE("periodization of the minimizer") {
  auto f = make_prop1_minimizer();
  auto g = periodize(f, 0.5, 1);
  REQUIRE(g.coef.size() >= 3);
  CHECK(g.coef[0] == doctest::Approx(evaluate(f, 0.0)));
  CHECK(g.coef[1] == doctest::Approx(evaluate(f, 0.5)));
  CHECK(g.coef[1] < 0.0);
  CHECK(g.tail_l1 < 1e-3);
  // aliasing guard
  CHECK_THROWS_AS(periodize(f, 1.2, 1), Error);
  // non-bandlimited input is rejected
  CHECK_THROWS_AS(periodize(make_closed_form(CFKind::Gaussian, 1), 0.1, 1),
                  Error);
}

TEST_CASE("torus metrics on explicit trigonometric polynomials") {
  TorusPolynomial p;
  p.coef = {1.0, 0.2};
  auto m = torus_metrics(p, 1);
  CHECK(m.k_s == 1);
  CHECK(m.r_torus == doctest::Approx(0.0));
  CHECK(m.product == doctest::Approx(0.0));

  TorusPolynomial q;  // 0.1 + 2 cos(2 pi x) * (-1): negative on [0, x_c)
  q.coef = {0.1, -1.0};
  auto mq = torus_metrics(q, 1);
  CHECK(mq.k_s == 2);
  double xc = std::acos(0.05) / (2.0 * kPi);
  CHECK(mq.r_torus == doctest::Approx(xc).epsilon(1e-6));
  CHECK(mq.product == doctest::Approx(2.0 * xc).epsilon(1e-6));
}

TEST_CASE("torus bridge for the periodized minimizer") {
  auto f = make_prop1_minimizer();
  auto g = periodize(f, 0.5, 1);
  auto m = torus_metrics(g, 1);
  CHECK(m.k_s == 2);
  CHECK(m.r_torus == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(m.product <= 0.5 + 1e-6);
}
