#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/quadrature.hpp"

using namespace signlab;

TEST_CASE("adaptive GK on smooth integrands") {
  auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.error_estimate < 1e-10);

  r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  // half of a unit-mass gaussian, essentially all inside [0,8]
  r = integrate_adaptive([](double x) { return std::exp(-kPi * x * x); }, 0.0,
                         8.0);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("adaptive GK refuses a non-integrable singularity") {
  CHECK_THROWS_AS(
      integrate_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0), Error);
}

TEST_CASE("gauss15 is exact on low-degree polynomials") {
  // int_-1^1 x^6 = 2/7
  double v = gauss15([](double x) { return std::pow(x, 6); }, -1.0, 1.0);
  CHECK(v == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
  v = gauss15([](double x) { return 3.0 * x * x - x + 1.0; }, 0.0, 2.0);
  CHECK(v == doctest::Approx(8.0 - 2.0 + 2.0).epsilon(1e-14));
}

TEST_CASE("wynn epsilon accelerates the alternating harmonic series") {
  std::vector<double> s;
  double acc = 0.0;
  for (int n = 1; n <= 30; ++n) {
    acc += (n % 2 ? 1.0 : -1.0) / n;
    s.push_back(acc);
  }
  CHECK(wynn_epsilon(s) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("neville extrapolation to zero") {
  std::vector<double> x{0.4, 0.2, 0.1, 0.05};
  std::vector<double> y;
  for (double t : x) y.push_back(3.0 + 2.0 * t + t * t);
  CHECK(neville_to_zero(x, y) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("oscillatory tail by period-aligned cells and epsilon table") {
  // int_16^inf sin(2 pi x)/x dx = pi/2 - Si(32 pi) = 0.0099452177961868373
  auto k = [](double x) { return std::sin(2.0 * kPi * x) / x; };
  // half-period cells make the partial sums alternate, which the epsilon
  // table resolves to machine precision
  CHECK(oscillatory_tail(k, 16.0, 0.5) ==
        doctest::Approx(0.0099452177961868373).epsilon(1e-9));
}

TEST_CASE("richardson tail of sinc^2") {
  // int_16^inf (sin(pi x)/(pi x))^2 dx = 0.0031656611447772416
  auto k = [](double x) {
    double s = std::sin(kPi * x) / (kPi * x);
    return s * s;
  };
  CHECK(richardson_tail(k, 16.0, 1.0, 8) ==
        doctest::Approx(0.0031656611447772416).epsilon(1e-9));
}

TEST_CASE("accelerated series sums 1/n^2") {
  auto term = [](long n) { return 1.0 / ((double)n * n); };
  double v = accelerated_series(term, 100000, 1);
  CHECK(v == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-9));
}

TEST_CASE("find_block picks a common near-integer multiple") {
  CHECK(find_block({1.0}) == 1);
  CHECK(find_block({2.0}) == 2);
  CHECK(find_block({0.5}) == 1);
  long b = find_block({0.3, 0.5});
  CHECK(b >= 1);
  CHECK(b <= 128);
  // b should be close to an integer multiple of both periods
  for (double p : {0.3, 0.5}) {
    double q = b / p;
    CHECK(std::abs(q - std::lround(q)) < 0.05 * q + 0.1);
  }
}
