#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/funcrep.hpp"

using namespace signlab;

TEST_CASE("catalog evaluation") {
  auto tent = make_closed_form(CFKind::Tent);
  CHECK(evaluate(tent, 0.0) == doctest::Approx(1.0));
  CHECK(evaluate(tent, 0.5) == doctest::Approx(0.5));
  CHECK(evaluate(tent, 1.5) == doctest::Approx(0.0));

  auto sincsq = make_closed_form(CFKind::SincSq);
  CHECK(evaluate(sincsq, 0.0) == doctest::Approx(1.0));
  CHECK(evaluate(sincsq, 0.5) ==
        doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(evaluate(sincsq, 2.0) == doctest::Approx(0.0).epsilon(1e-14));

  auto gauss = make_closed_form(CFKind::Gaussian, 3);
  CHECK(evaluate(gauss, 1.0) == doctest::Approx(std::exp(-kPi)).epsilon(1e-14));

  auto chi = make_closed_form(CFKind::Chi);
  CHECK(evaluate(chi, 0.7) == doctest::Approx(1.3));
}

TEST_CASE("prop1 minimizer values and removable singularity") {
  auto f = make_prop1_minimizer();
  CHECK(evaluate(f, 0.0) ==
        doctest::Approx(-0.8105694691387021).epsilon(1e-13));
  CHECK(std::abs(evaluate(f, 1.0)) < 1e-10);
  // slope 1 at x = 1 (the canonical amplitude is chosen to make it so)
  double h = 1e-6;
  double slope = (evaluate(f, 1.0 + h) - evaluate(f, 1.0 - h)) / (2.0 * h);
  CHECK(slope == doctest::Approx(1.0).epsilon(1e-6));
  // zeros at the other odd integers
  for (double x : {3.0, 5.0, 9.0}) CHECK(std::abs(evaluate(f, x)) < 1e-14);
  CHECK(nonneg_beyond(f) == doctest::Approx(1.0));
  CHECK(band_radius(f) == doctest::Approx(0.5));
}

TEST_CASE("fig1 minimizer: g = sinc^2 - tent") {
  auto g = make_fig1_minimizer();
  CHECK(evaluate(g, 0.0) == 0.0);
  CHECK(evaluate(g, 0.5) ==
        doctest::Approx(4.0 / (kPi * kPi) - 0.5).epsilon(1e-13));
  CHECK(evaluate(g, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
  // ||g||_1 on the line
  CHECK(l1_norm(g) == doctest::Approx(0.26853116650815064).epsilon(1e-9));
}

TEST_CASE("dilation") {
  auto f = make_closed_form(CFKind::Tent);
  auto g = dilate(f, 2.0);
  for (double x : {0.1, 0.3, 0.45})
    CHECK(evaluate(g, x) == doctest::Approx(evaluate(f, 2.0 * x)));
  CHECK(support_radius(g) == doctest::Approx(0.5));
}

TEST_CASE("analytic facts") {
  CHECK(support_radius(make_closed_form(CFKind::Tent)) == doctest::Approx(1.0));
  CHECK(band_radius(make_closed_form(CFKind::SincSq)) == doctest::Approx(1.0));
  CHECK(std::isinf(band_radius(make_closed_form(CFKind::Tent))));
  CHECK(tail_bound(make_closed_form(CFKind::Gaussian)).kind == TailBound::Gauss);
  CHECK(tail_bound(make_closed_form(CFKind::Chi)).kind == TailBound::Zero);
}

TEST_CASE("weighted integrals") {
  // int_0^1 r^2 (1 - r) dr = 1/12
  auto q = integrate_weighted(make_closed_form(CFKind::Tent), 2, 0.0, 1.0);
  CHECK(q.value == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  // infinite upper end with a gaussian tail: int_0^inf exp(-pi r^2) = 1/2
  q = integrate_weighted(make_closed_form(CFKind::Gaussian), 0, 0.0, kInf);
  CHECK(q.value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("spec JSON round trips") {
  auto f = make_closed_form(CFKind::SincSq, 1, 2.0, 0.5);
  auto g = parse_spec(serialize_spec(f));
  for (double x : {0.0, 0.4, 1.7, 3.2})
    CHECK(evaluate(g, x) == doctest::Approx(evaluate(f, x)).epsilon(1e-14));

  FunctionSpec e;
  e.dim = 2;
  e.rep = EigenExpansion{-1, {0.0, 0.5, 0.0, -0.25}};
  auto e2 = parse_spec(serialize_spec(e));
  for (double x : {0.0, 0.4, 1.3})
    CHECK(evaluate(e2, x) == doctest::Approx(evaluate(e, x)).epsilon(1e-13));
}

TEST_CASE("spec parse errors") {
  CHECK_THROWS_AS(parse_spec("not json"), Error);
  CHECK_THROWS_AS(parse_spec(R"({"dim": 0, "closed_form": {"kind": "tent"}})"),
                  Error);
  CHECK_THROWS_AS(parse_spec(R"({"dim": 1})"), Error);
  CHECK_THROWS_AS(
      parse_spec(R"({"dim": 1, "closed_form": {"kind": "nope"}})"), Error);
  // eigen parity violation: odd-index coefficient with sign "+"
  CHECK_THROWS_AS(
      parse_spec(R"({"dim": 1, "eigen": {"sign": "+", "coeffs": [1, 1]}})"),
      Error);
  // sampled profile must start at radius 0
  CHECK_THROWS_AS(parse_spec(R"({"dim": 1, "sampled": {
    "radii": [0.5, 1.0], "values": [1.0, 0.0], "tail": {"kind": "zero"}}})"),
                  Error);
}

TEST_CASE("sampled profiles interpolate their nodes") {
  SampledProfile sp;
  for (int i = 0; i <= 40; ++i) {
    double r = i / 10.0;
    sp.radii.push_back(r);
    sp.values.push_back(std::exp(-r));
  }
  sp.tail = TailBound::decay(std::exp(-4.0) * 55.0, 2.0);
  sp.finalize();
  CHECK(sp.eval(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(sp.eval(1.23) == doctest::Approx(std::exp(-1.23)).epsilon(1e-5));

  FunctionSpec f;
  f.dim = 1;
  f.rep = sp;
  auto f2 = parse_spec(serialize_spec(f));
  CHECK(evaluate(f2, 2.5) == doctest::Approx(evaluate(f, 2.5)).epsilon(1e-12));
}

TEST_CASE("custom closed forms cannot be serialized directly") {
  CustomData d;
  d.label = "opaque";
  d.eval = [](double) { return 0.0; };
  CHECK_THROWS_AS(serialize_spec(make_custom(1, d)), Error);
}
