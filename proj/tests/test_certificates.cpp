#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/certificates.hpp"

using namespace signlab;

TEST_CASE("second moment") {
  // gaussian, d=1: 2 int_0^inf r^2 exp(-pi r^2) dr = 1/(2 pi)
  CHECK(second_moment(make_closed_form(CFKind::Gaussian, 1)) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-10));
  // sinc^2 decays like r^-2: the second moment diverges
  CHECK_THROWS_AS(second_moment(make_closed_form(CFKind::SincSq)), Error);
}

TEST_CASE("lemma-two pointwise bound") {
  CHECK(lemma_two_bound(0.5, 0.5) ==
        doctest::Approx(0.31353838571097169).epsilon(1e-13));
  CHECK(lemma_two_bound(0.5, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(lemma_two_bound(0.2, 0.1), Error);   // r below 1/4
  CHECK_THROWS_AS(lemma_two_bound(0.8, 0.1), Error);   // r above 1/sqrt 2
  CHECK_THROWS_AS(lemma_two_bound(0.5, 0.6), Error);   // x beyond r
}

TEST_CASE("Phi integrals") {
  CHECK(phi(0.25) == doctest::Approx(0.0));
  CHECK(phi(0.26) == doctest::Approx(1.4910704728240969e-4).epsilon(1e-9));
  CHECK(phi(0.45) == doctest::Approx(0.025929939006225412).epsilon(1e-11));
  CHECK(phi(0.595) == doctest::Approx(0.12067235023747749).epsilon(1e-11));
}

TEST_CASE("import inequality") {
  auto ok = import_inequality(1.0, 0.5);
  CHECK(ok.passed);
  CHECK(ok.margin == doctest::Approx(1.25 * 0.5 * 0.75 - 0.125).epsilon(1e-14));
  auto bad = import_inequality(0.5, 0.121);
  CHECK_FALSE(bad.passed);
  CHECK(bad.margin < 0.0);
}

TEST_CASE("step-1 contradiction sweep") {
  auto res = step1_contradiction(0.45, 0.595, 0.121);
  CHECK(res.passed);
  CHECK(res.margin > 0.0);
  // degenerate parameters cannot produce a contradiction
  CHECK_FALSE(step1_contradiction(0.26, 0.26, 0.0).passed);
}

TEST_CASE("bathtub radii split the shell mass in half") {
  auto [s1, t1] = bathtub_radii(1, 1.0);
  CHECK(s1 == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(t1 == doctest::Approx(1.25).epsilon(1e-14));
  auto [s8, t8] = bathtub_radii(8, std::sqrt(2.0));
  CHECK(s8 == doctest::Approx(1.4128478655087083).epsilon(1e-13));
  CHECK(t8 == doctest::Approx(1.4155700892619910).epsilon(1e-13));
  // defining property in an arbitrary dimension
  int d = 5;
  double r = 1.3;
  auto [s, t] = bathtub_radii(d, r);
  CHECK(ball_volume(d) * (std::pow(r, d) - std::pow(s, d)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ball_volume(d) * (std::pow(t, d) - std::pow(r, d)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("convexity gap") {
  auto g1 = convexity_gap(1, 1.0);
  CHECK(g1.passed);
  CHECK(g1.margin == doctest::Approx(0.25).epsilon(1e-12));
  auto g8 = convexity_gap(8, std::sqrt(2.0));
  CHECK(g8.passed);
  CHECK(g8.margin == doctest::Approx(0.0019248841538354960).epsilon(1e-11));
}

TEST_CASE("bathtub minimization fills the cheap shells first") {
  // d=1 shells [0,1) and [1,2) have length-measure 2 each
  std::vector<double> radii{0.0, 1.0, 2.0};
  std::vector<double> values{2.0, 1.0};
  auto r1 = bathtub_minimize(radii, values, 1, 1.0);
  REQUIRE(r1.g.size() == 2);
  CHECK(r1.g[0] == doctest::Approx(0.0));
  CHECK(r1.g[1] == doctest::Approx(0.5));
  CHECK(r1.threshold == doctest::Approx(1.0));
  auto r2 = bathtub_minimize(radii, values, 1, 3.0);
  CHECK(r2.g[0] == doctest::Approx(0.5));
  CHECK(r2.g[1] == doctest::Approx(1.0));
  CHECK(r2.threshold == doctest::Approx(2.0));
  // ties share the marginal level
  auto r3 = bathtub_minimize(radii, {1.0, 1.0}, 1, 2.0);
  CHECK(r3.g[0] == doctest::Approx(0.5));
  CHECK(r3.g[1] == doctest::Approx(0.5));
}

TEST_CASE("improvement factor at the d=12 endpoint") {
  auto [theta, factor] = improvement_factor(12, std::sqrt(2.0));
  CHECK(theta == doctest::Approx(0.0058509082872891692).epsilon(1e-13));
  CHECK(factor == doctest::Approx(1.9995111118855501).epsilon(1e-13));
  CHECK(factor <= 2.0 - theta / 12.0);
  CHECK_THROWS_AS(improvement_factor(1, 0.1), Error);  // theta >= 1
}
