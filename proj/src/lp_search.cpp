#include "signlab/lp_search.hpp"

#include <algorithm>
#include <sstream>
#include <cmath>

#include "signlab/special.hpp"

namespace signlab {

namespace {

constexpr double kFeasibleSlack = 1e-7;
constexpr double kLeadingGamma = 1e-3;  // s c_last >= gamma t

std::vector<int> parity_indices(int s, int m) {
  std::vector<int> ks;
  for (int k = s > 0 ? 0 : 1; k <= m; k += 2) ks.push_back(k);
  if (ks.size() < 2)
    throw Error("feasibility_at_radius: need at least 2 basis elements");
  return ks;
}

// Smallest quarter-integer radius beyond which the basis is numerically zero.
double basis_cutoff(int d, int m, double from) {
  double x = 0.25 * std::ceil(std::max(from, 1.0) / 0.25);
  for (; x < 64.0; x += 0.25) {
    auto b = eigen_basis_all(m, d, x);
    double sum = 0.0;
    for (double v : b) sum += std::abs(v);
    if (sum < 1e-14) return x;
  }
  return 64.0;
}

// The feasibility LP with optional extra nonnegativity points (cutting
// planes discovered by scanning a previous candidate).
LPOutcome feasibility_lp(int d, int s, double r, int m, int window_pts,
                         int outer_pts, const std::vector<double>& extra) {
  if (d < 1 || (s != 1 && s != -1) || !(r > 0.0))
    throw Error("feasibility_at_radius: bad parameters");
  auto ks = parity_indices(s, m);
  const int nk = (int)ks.size();
  const double R = basis_cutoff(d, m, 2.0 * r + 0.25);

  LPProblem p;
  p.objective.assign(nk + 1, 0.0);
  p.objective[nk] = 1.0;  // maximize t
  p.lo.assign(nk + 1, -1.0);
  p.hi.assign(nk + 1, 1.0);
  auto basis_row = [&](double x) {
    std::vector<double> c(nk + 1, 0.0);
    auto b = eigen_basis_all(ks.back(), d, x);
    for (int i = 0; i < nk; ++i) c[i] = b[ks[i]];
    return c;
  };
  p.rows.push_back({basis_row(0.0), Relation::EQ, 0.0});
  for (int j = 0; j < window_pts; ++j) {
    double x = r + (2.0 * r - r) * j / (window_pts - 1.0);
    auto c = basis_row(x);
    c[nk] = -1.0;  // f(x) - t >= 0
    p.rows.push_back({std::move(c), Relation::GE, 0.0});
  }
  for (int j = 0; j < outer_pts; ++j) {
    double u = 0.5 * (1.0 - std::cos(kPi * (j + 0.5) / outer_pts));
    double x = 2.0 * r + (R - 2.0 * r) * u;
    p.rows.push_back({basis_row(x), Relation::GE, 0.0});
  }
  for (double x : extra) {
    auto c = basis_row(x);
    c[nk] = -1e-3;  // margin f(x) >= t/1000 so refined dips clear zero
    p.rows.push_back({std::move(c), Relation::GE, 0.0});
  }
  {
    std::vector<double> c(nk + 1, 0.0);
    c[nk - 1] = (double)s;
    c[nk] = -kLeadingGamma;  // tail sign: s c_last >= gamma t
    p.rows.push_back({std::move(c), Relation::GE, 0.0});
  }
  return solve_lp(p);
}

bool feasible(const LPOutcome& o) {
  return o.status == LPStatus::Optimal && o.objective_value > kFeasibleSlack;
}

// Grid dips of the candidate below zero on (r, R]: the locations where the
// finite constraint grid let the function slip negative.
std::vector<double> negative_dips(const FunctionSpec& f, double r, double R,
                                  int npts) {
  std::vector<double> gx(npts), gv(npts);
  for (int i = 0; i < npts; ++i) {
    gx[i] = r + (R - r) * (i + 1.0) / npts;
    gv[i] = evaluate(f, gx[i]);
  }
  std::vector<double> xs;
  for (int i = 0; i < npts; ++i) {
    bool left_ok = i == 0 || gv[i] <= gv[i - 1];
    bool right_ok = i == npts - 1 || gv[i] <= gv[i + 1];
    if (!(gv[i] < 0.0 && left_ok && right_ok)) continue;
    // localize the true minimum so the cut lands where it binds
    double a = i > 0 ? gx[i - 1] : r, b = i < npts - 1 ? gx[i + 1] : R;
    for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
      double u = a + (b - a) / 3.0, v = b - (b - a) / 3.0;
      if (evaluate(f, u) < evaluate(f, v)) b = v;
      else a = u;
    }
    xs.push_back(0.5 * (a + b));
  }
  // worst-first, capped per round
  std::sort(xs.begin(), xs.end(), [&](double a, double b) {
    return evaluate(f, a) < evaluate(f, b);
  });
  if (xs.size() > 60) xs.resize(60);
  return xs;
}

}  // namespace

LPOutcome feasibility_at_radius(int d, int s, double r, int m, int window_pts,
                                int outer_pts) {
  return feasibility_lp(d, s, r, m, window_pts, outer_pts, {});
}

FunctionSpec expansion_from_solution(int d, int s, int m,
                                     const std::vector<double>& solution) {
  auto ks = parity_indices(s, m);
  EigenExpansion e;
  e.sign = s;
  e.coeffs.assign(ks.back() + 1, 0.0);
  for (size_t i = 0; i < ks.size(); ++i) e.coeffs[ks[i]] = solution[i];
  FunctionSpec f;
  f.dim = d;
  f.rep = std::move(e);
  f.metadata = "lp-search candidate";
  return f;
}

SearchResult bisect_min_radius(int d, int s, int m, double tol) {
  if (!(tol > 0.0)) throw Error("bisect_min_radius: tol must be positive");
  SearchResult res;
  res.sign = s;
  res.dim = d;
  res.degree = m;

  const double R = basis_cutoff(d, m, 1.0);

  // "Feasible" means: the LP certificate survives cutting-plane refinement,
  // i.e. a dense scan of the candidate finds no dip below zero that the
  // finite constraint grid missed.
  auto probe = [&](double r, int wp, int op) {
    std::vector<double> extra;
    LPOutcome o;
    bool ok = false;
    for (int round = 0; round < 12; ++round) {
      o = feasibility_lp(d, s, r, m, wp, op, extra);
      if (!feasible(o)) { ok = false; break; }
      auto cand = expansion_from_solution(d, s, m, o.solution);
      auto dips = negative_dips(cand, r, R, 4096);
      if (dips.empty()) { ok = true; break; }
      extra.insert(extra.end(), dips.begin(), dips.end());
    }
    res.trace.emplace_back(
        r, o.status == LPStatus::Optimal ? o.objective_value : kNaN, ok);
    return std::make_pair(ok, std::move(o));
  };

  double sq = std::sqrt((double)d);
  double r_lo = 0.2 * sq;
  double r_hi = std::max(1.3, 0.62 * sq);
  auto [hi_ok, hi_out] = probe(r_hi, 200, 200);
  for (int i = 0; i < 4 && !hi_ok; ++i) {
    r_hi *= 1.4;
    std::tie(hi_ok, hi_out) = probe(r_hi, 200, 200);
  }
  if (!hi_ok)
    throw Error("bisect_min_radius: no feasible radius found (bracket "
                "invalid)");
  auto [lo_ok, lo_out] = probe(r_lo, 200, 200);
  for (int i = 0; i < 4 && lo_ok; ++i) {
    r_lo *= 0.6;
    std::tie(lo_ok, lo_out) = probe(r_lo, 200, 200);
  }
  if (lo_ok)
    throw Error("bisect_min_radius: lower bracket still feasible");

  LPOutcome best = std::move(hi_out);
  for (int i = 0; i < 30 && r_hi - r_lo > tol; ++i) {
    double mid = 0.5 * (r_lo + r_hi);
    auto [ok, out] = probe(mid, 200, 200);
    if (ok) {
      r_hi = mid;
      best = std::move(out);
    } else {
      r_lo = mid;
    }
  }
  res.r_upper = r_hi;
  res.candidate = expansion_from_solution(d, s, m, best.solution);
  res.verification = last_sign_change(res.candidate, 1e-9);
  if (res.verification.radius > res.r_upper + 1e-6) {
    // grid sufficiency gate: densify 2.5x and re-solve at r_upper once
    std::vector<double> extra;
    LPOutcome wide = feasibility_lp(d, s, r_hi, m, 500, 500, extra);
    for (int round = 0; round < 8 && feasible(wide); ++round) {
      auto cand = expansion_from_solution(d, s, m, wide.solution);
      auto dips = negative_dips(cand, r_hi, R, 8192);
      if (dips.empty()) {
        res.candidate = std::move(cand);
        res.verification = last_sign_change(res.candidate, 1e-9);
        break;
      }
      extra.insert(extra.end(), dips.begin(), dips.end());
      wide = feasibility_lp(d, s, r_hi, m, 500, 500, extra);
    }
    if (res.verification.radius > res.r_upper + 1e-6) {
      std::ostringstream os;
      os << "bisect_min_radius: verification radius "
         << res.verification.radius << " exceeds the certified r_upper "
         << res.r_upper << " after grid widening (grid too coarse)";
      throw Error(os.str());
    }
  }
  return res;
}

}  // namespace signlab
