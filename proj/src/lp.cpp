#include "signlab/lp.hpp"

#include <algorithm>
#include <cmath>

namespace signlab {

namespace {

constexpr double kPivTol = 1e-11;
constexpr double kCostTol = 1e-9;
constexpr int kIterCap = 20000;
constexpr int kStallWindow = 500;  // non-improving pivots before Bland's rule

struct Tableau {
  int m = 0, n = 0;             // rows, columns (excluding the rhs)
  std::vector<double> a;        // (m+1) x (n+1); last row = reduced costs
  std::vector<int> basis;       // basic column per row
  double& at(int i, int j) { return a[(size_t)i * (n + 1) + j]; }

  void pivot(int pr, int pc) {
    double piv = at(pr, pc);
    for (int j = 0; j <= n; ++j) at(pr, j) /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == pr) continue;
      double f = at(i, pc);
      if (f == 0.0) continue;
      for (int j = 0; j <= n; ++j) at(i, j) -= f * at(pr, j);
    }
    basis[pr] = pc;
  }
};

// Minimize the cost loaded in the last tableau row over columns [0, ncols).
// allowed[j] == false excludes a column from entering.
LPStatus run_simplex(Tableau& t, const std::vector<char>& allowed,
                     int& iterations) {
  int stall = 0;
  double last_obj = t.at(t.m, t.n);
  bool bland = false;
  while (iterations < kIterCap) {
    int pc = -1;
    double best = -kCostTol;
    for (int j = 0; j < t.n; ++j) {
      if (!allowed[j]) continue;
      double c = t.at(t.m, j);
      if (bland) {
        if (c < -kCostTol) { pc = j; break; }
      } else if (c < best) {
        best = c;
        pc = j;
      }
    }
    if (pc < 0) return LPStatus::Optimal;
    int pr = -1;
    double ratio = kInf;
    for (int i = 0; i < t.m; ++i) {
      double aij = t.at(i, pc);
      if (aij <= kPivTol) continue;
      double r = t.at(i, t.n) / aij;
      if (r < ratio - 1e-12 ||
          (r < ratio + 1e-12 && (pr < 0 || t.basis[i] < t.basis[pr]))) {
        ratio = r;
        pr = i;
      }
    }
    if (pr < 0) return LPStatus::Unbounded;
    t.pivot(pr, pc);
    ++iterations;
    // at(m, n) = -cost, so progress moves it upward
    double obj = t.at(t.m, t.n);
    if (obj > last_obj + 1e-12) {
      stall = 0;
      bland = false;
      last_obj = obj;
    } else if (++stall > kStallWindow) {
      bland = true;
    }
  }
  return LPStatus::Stalled;
}

}  // namespace

LPOutcome solve_lp(const LPProblem& p) {
  const int nx = (int)p.objective.size();
  for (double v : p.objective)
    if (!std::isfinite(v)) throw Error("solve_lp: NaN in objective");
  for (auto& r : p.rows) {
    if ((int)r.coeffs.size() != nx) throw Error("solve_lp: dimension mismatch");
    for (double v : r.coeffs)
      if (!std::isfinite(v)) throw Error("solve_lp: NaN in constraints");
    if (!std::isfinite(r.rhs)) throw Error("solve_lp: NaN rhs");
  }
  auto lo = p.lo, hi = p.hi;
  lo.resize(nx, -kInf);
  hi.resize(nx, kInf);

  // Substitute every variable by nonnegative ones:
  //   lo finite:            x = lo + y
  //   lo = -inf, hi finite: x = hi - y
  //   free:                 x = y+ - y-
  // Remaining finite bounds become extra <= rows.
  struct Map { int col = -1, col2 = -1; double base = 0.0, sgn = 1.0; };
  std::vector<Map> vmap(nx);
  int ny = 0;
  for (int j = 0; j < nx; ++j) {
    if (std::isfinite(lo[j])) {
      vmap[j] = {ny++, -1, lo[j], 1.0};
    } else if (std::isfinite(hi[j])) {
      vmap[j] = {ny++, -1, hi[j], -1.0};
    } else {
      vmap[j] = {ny, ny + 1, 0.0, 1.0};
      ny += 2;
    }
  }
  struct StdRow { std::vector<double> c; Relation rel; double rhs; };
  std::vector<StdRow> rows;
  auto push_row = [&](const std::vector<double>& cx, Relation rel, double rhs) {
    StdRow r{std::vector<double>(ny, 0.0), rel, rhs};
    for (int j = 0; j < nx; ++j) {
      if (cx[j] == 0.0) continue;
      r.rhs -= cx[j] * vmap[j].base;
      r.c[vmap[j].col] += cx[j] * vmap[j].sgn;
      if (vmap[j].col2 >= 0) r.c[vmap[j].col2] -= cx[j];
    }
    rows.push_back(std::move(r));
  };
  for (auto& r : p.rows) push_row(r.coeffs, r.rel, r.rhs);
  for (int j = 0; j < nx; ++j) {
    if (std::isfinite(lo[j]) && std::isfinite(hi[j]) && hi[j] > lo[j]) {
      std::vector<double> c(nx, 0.0);
      c[j] = 1.0;
      push_row(c, Relation::LE, hi[j]);
    } else if (std::isfinite(lo[j]) && std::isfinite(hi[j]) && hi[j] == lo[j]) {
      std::vector<double> c(nx, 0.0);
      c[j] = 1.0;
      push_row(c, Relation::EQ, hi[j]);
    }
  }
  std::vector<double> cy(ny, 0.0);
  double cbase = 0.0;
  for (int j = 0; j < nx; ++j) {
    cbase += p.objective[j] * vmap[j].base;
    cy[vmap[j].col] += p.objective[j] * vmap[j].sgn;
    if (vmap[j].col2 >= 0) cy[vmap[j].col2] -= p.objective[j];
  }

  // Equilibrate: scale each row to max |coeff| = 1 so rows whose
  // coefficients differ by many orders of magnitude pivot cleanly.
  for (auto& r : rows) {
    double mx = 0.0;
    for (double v : r.c) mx = std::max(mx, std::abs(v));
    if (mx > 0.0 && mx != 1.0) {
      for (double& v : r.c) v /= mx;
      r.rhs /= mx;
    }
  }

  // Normalize: rhs >= 0, and turn >= into <= where that avoids an artificial.
  for (auto& r : rows) {
    if (r.rhs < 0.0 || (r.rhs == 0.0 && r.rel == Relation::GE)) {
      for (double& v : r.c) v = -v;
      r.rhs = -r.rhs;
      if (r.rel == Relation::LE) r.rel = Relation::GE;
      else if (r.rel == Relation::GE) r.rel = Relation::LE;
    }
  }

  const int m = (int)rows.size();
  int n_slack = 0, n_art = 0;
  for (auto& r : rows) {
    if (r.rel != Relation::EQ) ++n_slack;
    if (r.rel != Relation::LE) ++n_art;
  }
  Tableau t;
  t.m = m;
  t.n = ny + n_slack + n_art;
  t.a.assign((size_t)(m + 1) * (t.n + 1), 0.0);
  t.basis.assign(m, -1);
  int sj = ny, aj = ny + n_slack;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < ny; ++j) t.at(i, j) = rows[i].c[j];
    t.at(i, t.n) = rows[i].rhs;
    if (rows[i].rel == Relation::LE) {
      t.at(i, sj) = 1.0;
      t.basis[i] = sj++;
    } else if (rows[i].rel == Relation::GE) {
      t.at(i, sj++) = -1.0;
      t.at(i, aj) = 1.0;
      t.basis[i] = aj++;
    } else {
      t.at(i, aj) = 1.0;
      t.basis[i] = aj++;
    }
  }

  LPOutcome out;
  std::vector<char> allowed(t.n, 1);
  if (n_art > 0) {
    // phase 1: minimize the artificial sum
    for (int j = ny + n_slack; j < t.n; ++j) t.at(m, j) = 1.0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= ny + n_slack)
        for (int j = 0; j <= t.n; ++j) t.at(m, j) -= t.at(i, j);
    LPStatus st = run_simplex(t, allowed, out.iterations);
    if (st == LPStatus::Stalled) { out.status = st; return out; }
    if (-t.at(m, t.n) > 1e-8) {
      out.status = LPStatus::Infeasible;
      return out;
    }
    // drive lingering artificials out of the basis where possible
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < ny + n_slack) continue;
      for (int j = 0; j < ny + n_slack; ++j)
        if (std::abs(t.at(i, j)) > kPivTol) { t.pivot(i, j); break; }
    }
    for (int j = ny + n_slack; j < t.n; ++j) allowed[j] = 0;
  }

  // phase 2: minimize -objective
  for (int j = 0; j <= t.n; ++j) t.at(m, j) = 0.0;
  for (int j = 0; j < ny; ++j) t.at(m, j) = -cy[j];
  for (int i = 0; i < m; ++i) {
    double cb = t.basis[i] < ny ? -cy[t.basis[i]] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j <= t.n; ++j) t.at(m, j) -= cb * t.at(i, j);
  }
  out.status = run_simplex(t, allowed, out.iterations);
  if (out.status != LPStatus::Optimal) return out;

  std::vector<double> y(ny, 0.0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < ny) y[t.basis[i]] = t.at(i, t.n);
  out.solution.assign(nx, 0.0);
  for (int j = 0; j < nx; ++j) {
    out.solution[j] = vmap[j].base + vmap[j].sgn * y[vmap[j].col];
    if (vmap[j].col2 >= 0) out.solution[j] -= y[vmap[j].col2];
  }
  double acc = 0.0;
  for (int j = 0; j < ny; ++j) acc += cy[j] * y[j];
  out.objective_value = cbase + acc;
  return out;
}

}  // namespace signlab
