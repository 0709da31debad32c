#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/signtools.hpp"
#include "signlab/transforms.hpp"

using namespace signlab;

TEST_CASE("last sign change of the classic minimizers") {
  auto g = make_fig1_minimizer();
  auto rep = last_sign_change(g);
  CHECK(rep.radius == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.tail_argument == TailArgument::ClosedFormPositivity);
  // the interior crossing at x* = 0.36010312611627242 shows up as a bracket
  bool found = false;
  for (auto& [a, b] : rep.brackets)
    if (a <= 0.36010312611627242 && 0.36010312611627242 <= b) found = true;
  CHECK(found);

  auto f = make_prop1_minimizer();
  CHECK(last_sign_change(f).radius == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("last sign change of an eigen expansion via the root bound") {
  // -ell_1 in d=1: last zero of 1/2 - 2 pi x^2 at x = 1/sqrt(4 pi)
  FunctionSpec f;
  f.dim = 1;
  f.rep = EigenExpansion{-1, {0.0, -1.0}};
  auto rep = last_sign_change(f);
  CHECK(rep.radius == doctest::Approx(std::sqrt(1.0 / (4.0 * kPi))).epsilon(1e-7));
  CHECK(rep.tail_argument == TailArgument::PolynomialRootBound);
}

TEST_CASE("last sign change refuses non-eventually-nonnegative input") {
  FunctionSpec f;
  f.dim = 1;
  f.rep = EigenExpansion{-1, {0.0, 1.0}};  // ell_1 alone: negative tail sign
  try {
    last_sign_change(f);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("not eventually nonnegative") !=
          std::string::npos);
  }
}

TEST_CASE("positive-part mass") {
  auto g = make_fig1_minimizer();
  auto m = sigma_plus_mass(g, 1.0);
  CHECK(m.sigma == doctest::Approx(0.037088916834355947).epsilon(1e-7));
  CHECK(m.ratio ==
        doctest::Approx(0.037088916834355947 / 0.26853116650815064)
            .epsilon(1e-6));

  auto gauss = make_closed_form(CFKind::Gaussian, 1);
  auto mg = sigma_plus_mass(gauss, 1.0);
  // erf(sqrt(pi))
  CHECK(mg.sigma == doctest::Approx(0.98781111781519711).epsilon(1e-10));
  CHECK(mg.ratio == doctest::Approx(0.98781111781519711).epsilon(1e-9));
}

TEST_CASE("superlevel measure") {
  auto g = make_fig1_minimizer();
  // {g >= 0} inside [-1,1] is [-x*, x*]
  CHECK(superlevel_measure(g, 1.0) ==
        doctest::Approx(0.72020625223254485).epsilon(1e-6));
  auto gauss = make_closed_form(CFKind::Gaussian, 2);
  CHECK(superlevel_measure(gauss, 1.5) ==
        doctest::Approx(ball_volume(2) * 1.5 * 1.5).epsilon(1e-9));
}

TEST_CASE("first negative point") {
  auto g = make_fig1_minimizer();
  auto [x0, v0] = find_negative_point(g);
  CHECK(x0 == doctest::Approx(0.36010312611627242).epsilon(1e-6));
  CHECK(v0 < 0.0);
  CHECK_THROWS_AS(find_negative_point(make_closed_form(CFKind::Gaussian)),
                  Error);
}

TEST_CASE("balance_scale equalizes the two radii") {
  // a +1 eigenfunction (both f and fhat eventually nonnegative), thrown off
  // balance by a dilation: r(g) = r/2, r(ghat) = 2r
  FunctionSpec f;
  f.dim = 1;
  f.rep = EigenExpansion{1, {-1.0, 0.0, 0.0, 0.0, 0.2}};
  double r = last_sign_change(f).radius;
  auto g = dilate(f, 2.0);
  auto h = balance_scale(g);
  CHECK(last_sign_change(h).radius == doctest::Approx(r).epsilon(1e-5));
  CHECK(last_sign_change(fourier_transform(h)).radius ==
        doctest::Approx(r).epsilon(1e-5));
}
