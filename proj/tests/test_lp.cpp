#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "signlab/lp.hpp"

using namespace signlab;

namespace {

// Plain one-phase full-tableau simplex oracle for
//   max c.x  s.t.  A x <= b (b >= 0), 0 <= x <= u,
// written independently of the library's implementation.
double oracle_simplex_max(const std::vector<std::vector<double>>& A,
                          const std::vector<double>& b,
                          const std::vector<double>& c,
                          const std::vector<double>& u) {
  size_t m = A.size() + u.size(), n = c.size();
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(n + m + 1, 0.0));
  for (size_t i = 0; i < A.size(); ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1.0;
    T[i].back() = b[i];
  }
  for (size_t i = 0; i < u.size(); ++i) {
    size_t r = A.size() + i;
    T[r][i] = 1.0;
    T[r][n + r] = 1.0;
    T[r].back() = u[i];
  }
  for (size_t j = 0; j < n; ++j) T[m][j] = -c[j];
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;
  for (int iter = 0; iter < 100000; ++iter) {
    // Bland's rule throughout: slow but cycle-free
    size_t piv = n + m;
    for (size_t j = 0; j < n + m; ++j)
      if (T[m][j] < -1e-9) { piv = j; break; }
    if (piv == n + m) break;
    size_t row = m;
    double best = 0.0;
    for (size_t i = 0; i < m; ++i)
      if (T[i][piv] > 1e-11) {
        double ratio = T[i].back() / T[i][piv];
        if (row == m || ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && basis[i] < basis[row]))
          { row = i; best = ratio; }
      }
    REQUIRE(row != m);  // bounded by construction
    double pv = T[row][piv];
    for (auto& x : T[row]) x /= pv;
    for (size_t i = 0; i <= m; ++i)
      if (i != row && std::abs(T[i][piv]) > 1e-14) {
        double f = T[i][piv];
        for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[row][j];
      }
    basis[row] = piv;
  }
  return T[m].back();
}

}  // namespace

TEST_CASE("basic maximization") {
  LPProblem p;
  p.objective = {1.0, 1.0};
  p.rows.push_back({{1.0, 1.0}, Relation::LE, 1.0});
  p.lo = {0.0, 0.0};
  p.hi = {kInf, kInf};
  auto out = solve_lp(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(out.solution[0] + out.solution[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("equality and GE rows") {
  LPProblem p;
  p.objective = {1.0, 0.0};
  p.rows.push_back({{1.0, 0.0}, Relation::EQ, 0.5});
  p.rows.push_back({{0.0, 1.0}, Relation::GE, 0.25});
  p.rows.push_back({{0.0, 1.0}, Relation::LE, 2.0});
  p.lo = {0.0, 0.0};
  p.hi = {kInf, kInf};
  auto out = solve_lp(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(out.solution[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(out.solution[1] >= 0.25 - 1e-10);
}

TEST_CASE("infeasible and unbounded detection") {
  LPProblem p;
  p.objective = {1.0};
  p.rows.push_back({{1.0}, Relation::GE, 1.0});
  p.rows.push_back({{1.0}, Relation::LE, 0.0});
  p.lo = {0.0};
  p.hi = {kInf};
  CHECK(solve_lp(p).status == LPStatus::Infeasible);

  LPProblem q;
  q.objective = {1.0};
  q.lo = {0.0};
  q.hi = {kInf};
  CHECK(solve_lp(q).status == LPStatus::Unbounded);
}

TEST_CASE("variable bounds: negative lower, upper-only, free") {
  LPProblem p;  // max -x, x in [-3, inf)
  p.objective = {-1.0};
  p.lo = {-3.0};
  p.hi = {kInf};
  auto out = solve_lp(p);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(out.solution[0] == doctest::Approx(-3.0).epsilon(1e-10));

  LPProblem q;  // max x, x in (-inf, 2]
  q.objective = {1.0};
  q.lo = {-kInf};
  q.hi = {2.0};
  out = solve_lp(q);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.solution[0] == doctest::Approx(2.0).epsilon(1e-10));

  LPProblem r;  // free variables pinned by an equality and two-sided rows
  r.objective = {1.0, 0.0};
  r.rows.push_back({{1.0, 1.0}, Relation::EQ, -1.5});
  r.rows.push_back({{0.0, 1.0}, Relation::LE, 0.5});
  r.rows.push_back({{0.0, 1.0}, Relation::GE, -0.5});
  r.lo = {-kInf, -kInf};
  r.hi = {kInf, kInf};
  out = solve_lp(r);
  REQUIRE(out.status == LPStatus::Optimal);
  // max x = -1.5 - y with y >= -0.5
  CHECK(out.objective_value == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(out.solution[1] == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("degenerate problem still terminates") {
  // classic degeneracy: many redundant constraints through the same vertex
  LPProblem p;
  p.objective = {1.0, 1.0, 1.0};
  for (int i = 0; i < 6; ++i) {
    std::vector<double> row(3, 0.0);
    row[i % 3] = 1.0;
    row[(i + 1) % 3] = (i % 2) ? 0.5 : 2.0;
    p.rows.push_back({row, Relation::LE, 1.0});
  }
  p.lo = {0.0, 0.0, 0.0};
  p.hi = {kInf, kInf, kInf};
  auto out = solve_lp(p);
  CHECK(out.status == LPStatus::Optimal);
}

TEST_CASE("random instances agree with the oracle simplex") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int inst = 0; inst < 5; ++inst) {
    size_t m = 10, n = 20;
    std::vector<std::vector<double>> A(m, std::vector<double>(n));
    std::vector<double> b(m), c(n), u(n);
    for (auto& row : A)
      for (auto& a : row) a = uni(rng) < 0.3 ? 0.0 : uni(rng);
    for (auto& x : b) x = 0.5 + uni(rng);
    for (auto& x : c) x = uni(rng) - 0.2;
    for (auto& x : u) x = 0.5 + 2.0 * uni(rng);
    LPProblem p;
    p.objective = c;
    for (size_t i = 0; i < m; ++i) p.rows.push_back({A[i], Relation::LE, b[i]});
    p.lo.assign(n, 0.0);
    p.hi = u;
    auto out = solve_lp(p);
    REQUIRE(out.status == LPStatus::Optimal);
    double ref = oracle_simplex_max(A, b, c, u);
    CHECK(out.objective_value == doctest::Approx(ref).epsilon(1e-7));
    // the reported solution is feasible and attains the objective
    double attained = 0.0;
    for (size_t j = 0; j < n; ++j) {
      CHECK(out.solution[j] >= -1e-8);
      CHECK(out.solution[j] <= u[j] + 1e-8);
      attained += c[j] * out.solution[j];
    }
    CHECK(attained == doctest::Approx(out.objective_value).epsilon(1e-8));
    for (size_t i = 0; i < m; ++i) {
      double lhs = 0.0;
      for (size_t j = 0; j < n; ++j) lhs += A[i][j] * out.solution[j];
      CHECK(lhs <= b[i] + 1e-8);
    }
  }
}
