#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/constructions.hpp"
#include "signlab/signtools.hpp"
#include "signlab/transforms.hpp"

using namespace signlab;

TEST_CASE("symmetric comb atoms") {
  auto c = symmetric_comb(0.7);
  REQUIRE(c.atoms.size() == 3);
  double total = 0.0;
  for (auto& [x, w] : c.atoms) total += w;
  CHECK(total == doctest::Approx(4.0));
}

TEST_CASE("eigen_symmetrize of the tent reproduces the classic minimizer") {
  auto F = eigen_symmetrize(make_closed_form(CFKind::Tent), -1);
  auto g = make_fig1_minimizer();
  for (double x : {0.0, 0.2, 0.36, 0.9, 1.5, 3.0})
    CHECK(evaluate(F, x) == doctest::Approx(evaluate(g, x)).epsilon(1e-12));
  // F is a -1 eigenfunction: its transform equals -F
  auto Fh = fourier_transform(F);
  for (double x : {0.3, 1.1})
    CHECK(evaluate(Fh, x) == doctest::Approx(-evaluate(F, x)).epsilon(1e-10));
}

TEST_CASE("eigen_symmetrize on an expansion doubles or kills") {
  FunctionSpec f;
  f.dim = 1;
  f.rep = EigenExpansion{-1, {0.0, 0.4}};
  auto doubled = eigen_symmetrize(f, -1);
  CHECK(evaluate(doubled, 0.7) ==
        doctest::Approx(2.0 * evaluate(f, 0.7)).epsilon(1e-13));
  auto killed = eigen_symmetrize(f, 1);
  CHECK(evaluate(killed, 0.7) == doctest::Approx(0.0));
}

TEST_CASE("dirac_symmetrize: values and transform") {
  auto g = dirac_symmetrize(make_closed_form(CFKind::Gaussian, 1), 1.0);
  auto gs = [](double x) { return std::exp(-kPi * x * x); };
  for (double x : {0.0, 0.3, 1.4}) {
    double ref = gs(x - 1.0) + gs(x + 1.0) + 2.0 * gs(x);
    CHECK(evaluate(g, x) == doctest::Approx(ref).epsilon(1e-13));
  }
  for (double xi : {0.2, 0.8}) {
    double ref = (2.0 * std::cos(2.0 * kPi * xi) + 2.0) * gs(xi);
    CHECK(evaluate(fourier_transform(g), xi) ==
          doctest::Approx(ref).epsilon(1e-12));
    CHECK(radial_ft_value(g, xi) == doctest::Approx(ref).epsilon(1e-8));
  }
  CHECK_THROWS_AS(dirac_symmetrize(make_closed_form(CFKind::Gaussian, 2), 1.0),
                  Error);
}

TEST_CASE("gaussian_correct produces a self-dual function vanishing cheaply") {
  auto f = make_prop1_minimizer();
  auto h = gaussian_correct(f);
  // h(0) = (f(0) + fhat(0))/2 = f(0)/2 here, since fhat(0) = 0
  CHECK(evaluate(h, 0.0) ==
        doctest::Approx(0.5 * -0.8105694691387021).epsilon(1e-10));
  for (double x : {0.4, 0.9})
    CHECK(radial_ft_value(h, x) == doctest::Approx(evaluate(h, x)).epsilon(1e-7));
  // refuses input whose corrected value at the origin would not be negative
  CHECK_THROWS_AS(gaussian_correct(make_closed_form(CFKind::Tent)), Error);
}

TEST_CASE("build_eta in d=1") {
  auto res = build_eta(1);
  CHECK(res.A > 0.0);
  // eta(0) = -psi(0)/A with psi(0) = 11.513673833126046
  CHECK(evaluate(res.eta, 0.0) * res.A ==
        doctest::Approx(-11.513673833126046).epsilon(1e-6));
  // certified growth: x^2 eta(x) >= 1 on the verification window
  for (double x : {3.0, 7.0, 20.0})
    CHECK(x * x * evaluate(res.eta, x) >= 1.0 - 1e-9);
  // self-duality at a spot check
  CHECK(radial_ft_value(res.eta, 0.8) ==
        doctest::Approx(evaluate(res.eta, 0.8)).epsilon(1e-5));
}

TEST_CASE("mollify_bandlimit caps the band and preserves transform signs") {
  auto g = make_fig1_minimizer();
  auto m = mollify_bandlimit(g, 0.5);
  CHECK(band_radius(m) == doctest::Approx(4.0));
  auto mh = fourier_transform(m);
  // ghat = -g <= 0 beyond 1; the mollified transform keeps that sign
  for (double xi : {1.2, 1.5, 1.8})
    CHECK(evaluate(mh, xi) <= 1e-12);
  // near the origin the window is ~1 and the transform is barely touched
  CHECK(evaluate(mh, 0.1) ==
        doctest::Approx(-evaluate(g, 0.1)).epsilon(5e-2));
  CHECK(std::abs(evaluate(mh, 0.1)) > 0.05);
  // where ghat > 0 the window keeps it clearly positive
  CHECK(evaluate(mh, 0.5) > 0.05);
  // beyond the band it vanishes
  CHECK(std::abs(evaluate(mh, 4.5)) < 1e-12);
}

TEST_CASE("schwartz_smooth keeps the sign-change radius nearly intact") {
  FunctionSpec f;
  f.dim = 1;
  f.rep = EigenExpansion{1, {-1.0, 0.0, 0.0, 0.0, 0.2}};
  REQUIRE(evaluate(f, 0.0) < 0.0);
  double rf = last_sign_change(f).radius;
  double delta = 0.1;
  auto h = schwartz_smooth(f, delta);
  CHECK(evaluate(h, 0.0) < 0.0);
  double rh = last_sign_change(h).radius;
  CHECK(rh <= rf + 2.0 * delta + 1e-6);
  CHECK_THROWS_AS(
      schwartz_smooth(make_closed_form(CFKind::Gaussian, 2), 0.1), Error);
}
