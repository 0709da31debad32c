#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signlab/lp_search.hpp"
#include "signlab/special.hpp"

using namespace signlab;

TEST_CASE("feasibility flips across the critical radius, d=1 minus") {
  // the minimal radius is 1; comfortably above it the LP must be feasible,
  // well below it infeasible at any degree
  auto above = feasibility_at_radius(1, -1, 1.10, 40);
  CHECK(above.status == LPStatus::Optimal);
  CHECK(above.objective_value > 1e-7);
  auto below = feasibility_at_radius(1, -1, 0.80, 40);
  bool infeasible = below.status != LPStatus::Optimal ||
                    below.objective_value <= 1e-7;
  CHECK(infeasible);
}

TEST_CASE("expansion_from_solution respects parity and values") {
  // sign -1, degree 5: parity coefficients are c_1, c_3, c_5 plus the slack t
  std::vector<double> sol{0.5, -0.25, 0.1, 0.0};
  auto f = expansion_from_solution(1, -1, 5, sol);
  auto* e = std::get_if<EigenExpansion>(&f.rep);
  REQUIRE(e != nullptr);
  CHECK(e->sign == -1);
  REQUIRE(e->coeffs.size() == 6);
  CHECK(e->coeffs[1] == doctest::Approx(0.5));
  CHECK(e->coeffs[3] == doctest::Approx(-0.25));
  CHECK(e->coeffs[5] == doctest::Approx(0.1));
  CHECK(e->coeffs[0] == doctest::Approx(0.0));
  double v = 0.0;
  for (int k = 0; k <= 5; ++k)
    v += e->coeffs[k] * eigen_basis_value(k, 1, 0.9);
  CHECK(evaluate(f, 0.9) == doctest::Approx(v).epsilon(1e-13));
}

TEST_CASE("bisection finds the d=1 minus minimizer radius") {
  auto res = bisect_min_radius(1, -1, 40, 1e-3);
  CHECK(res.r_upper >= 0.995);
  CHECK(res.r_upper <= 1.01);
  CHECK(std::abs(evaluate(res.candidate, 0.0)) < 1e-6);
  CHECK(res.verification.radius <= res.r_upper + 1e-6);
  // the trace must bracket: some infeasible radius below, feasible at the top
  bool any_infeasible = false, any_feasible = false;
  for (auto& [r, t, ok] : res.trace) {
    (ok ? any_feasible : any_infeasible) = true;
    if (ok) CHECK(r >= res.verification.radius - 1e-6);
  }
  CHECK(any_feasible);
  CHECK(any_infeasible);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(feasibility_at_radius(1, 0, 1.0, 10), Error);
  CHECK_THROWS_AS(feasibility_at_radius(0, -1, 1.0, 10), Error);
  CHECK_THROWS_AS(feasibility_at_radius(1, -1, -1.0, 10), Error);
  CHECK_THROWS_AS(bisect_min_radius(1, -1, 0, 1e-3), Error);
}
