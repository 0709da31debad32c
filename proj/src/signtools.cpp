#include "signlab/signtools.hpp"

#include <algorithm>
#include <cmath>

#include "signlab/transforms.hpp"

namespace signlab {

namespace {

constexpr int kScanPoints = 4096;

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Geometric points near 0 plus a uniform sweep of [0, w], sorted, deduped.
std::vector<double> scan_grid(double w, int n) {
  std::vector<double> g;
  g.reserve(n + 2);
  int half = n / 2;
  for (int i = 0; i <= half; ++i)
    g.push_back(w * std::pow(1e-5, 1.0 - (double)i / half));
  for (int i = 0; i <= half; ++i) g.push_back(w * i / half);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

// Why the representation cannot be certified eventually nonnegative.
[[noreturn]] void throw_tail_diagnostic(const FunctionSpec& f) {
  if (auto* e = std::get_if<EigenExpansion>(&f.rep)) {
    int kmax = (int)e->coeffs.size() - 1;
    while (kmax >= 0 && e->coeffs[kmax] == 0.0) --kmax;
    if (kmax >= 0 && e->sign * e->coeffs[kmax] < 0.0)
      throw Error("last_sign_change: not eventually nonnegative "
                  "(leading eigen coefficient has the wrong sign)");
    throw Error("last_sign_change: tail not certifiable (eigen leading "
                "coefficient vanishes or is ambiguous)");
  }
  if (auto* sp = std::get_if<SampledProfile>(&f.rep)) {
    if (sp->values.back() < 0.0)
      throw Error("last_sign_change: not eventually nonnegative "
                  "(sampled profile ends negative)");
    throw Error("last_sign_change: tail not certifiable (sampled profile)");
  }
  // Closed forms: negative amplitude on an unbounded-support base, or a
  // custom spec without a nonneg_beyond fact.
  if (auto* cf = std::get_if<ClosedForm>(&f.rep)) {
    if (cf->kind != CFKind::Custom && cf->amplitude < 0.0)
      throw Error("last_sign_change: not eventually nonnegative "
                  "(negative amplitude, unbounded support)");
  }
  throw Error("last_sign_change: tail not certifiable for this spec");
}

TailArgument classify_tail(const FunctionSpec& f) {
  if (std::holds_alternative<EigenExpansion>(f.rep))
    return TailArgument::PolynomialRootBound;
  if (std::holds_alternative<SampledProfile>(f.rep))
    return TailArgument::DecayBound;
  return TailArgument::ClosedFormPositivity;
}

}  // namespace

SignChangeReport last_sign_change(const FunctionSpec& f, double tol) {
  if (!(tol > 0.0)) throw Error("last_sign_change: tol must be positive");
  double w = nonneg_beyond(f);
  if (std::isnan(w)) throw_tail_diagnostic(f);
  SignChangeReport rep;
  rep.tail_argument = classify_tail(f);
  rep.tail_radius = w;
  rep.tolerance = tol;
  if (w <= 0.0) return rep;  // nonnegative everywhere

  auto grid = scan_grid(w, kScanPoints);
  std::vector<double> vals(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) vals[i] = evaluate(f, grid[i]);

  int last_neg = -1;
  int prev = -1;  // index of last grid point with a nonzero sign
  for (size_t i = 0; i < grid.size(); ++i) {
    int s = sgn(vals[i]);
    if (s == 0) {
      // zero on the grid: a touch if the nonzero neighbors agree in sign
      bool flip = false;
      for (size_t j = i + 1; j < grid.size(); ++j)
        if (int t = sgn(vals[j]); t != 0) {
          flip = prev >= 0 && t != sgn(vals[prev]);
          break;
        }
      if (!flip && i > 0 && i + 1 < grid.size()) rep.touches.push_back(grid[i]);
      continue;
    }
    if (s < 0) last_neg = (int)i;
    if (prev >= 0 && s != sgn(vals[prev])) {
      // refine the flip bracket to width <= tol by bisection
      double a = grid[prev], b = grid[i];
      double fa = vals[prev];
      while (b - a > tol) {
        double m = 0.5 * (a + b), fm = evaluate(f, m);
        if (sgn(fm) == 0 || sgn(fm) == sgn(fa)) a = m, fa = fm;
        else b = m;
      }
      rep.brackets.emplace_back(a, b);
    }
    prev = (int)i;
  }
  if (last_neg < 0) return rep;  // no negative values: r(f) = 0

  // r(f) = sup of the negative set: push the last negative point up against
  // the first nonnegative point after it (or the certified tail radius).
  double lo = grid[last_neg];
  double hi = w;
  for (size_t i = last_neg + 1; i < grid.size(); ++i)
    if (vals[i] >= 0.0) { hi = grid[i]; break; }
  while (hi - lo > tol) {
    double m = 0.5 * (lo + hi);
    if (evaluate(f, m) < 0.0) lo = m;
    else hi = m;
  }
  rep.radius = 0.5 * (lo + hi);
  return rep;
}

MassReport sigma_plus_mass(const FunctionSpec& f, double r) {
  if (!(r >= 0.0)) throw Error("sigma_plus_mass: r must be >= 0");
  MassReport m;
  m.r_used = r;
  if (r == 0.0) return m;
  int d = f.dim;
  auto plus = [&](double rho) {
    return std::pow(rho, d - 1) * std::max(evaluate(f, rho), 0.0);
  };
  m.sigma = sphere_area(d) * integrate_adaptive(plus, 0.0, r, 1e-12, 1e-12).value;
  double total = l1_norm(f);
  if (!(total > 0.0)) throw Error("sigma_plus_mass: ||f||_1 vanishes");
  m.ratio = std::clamp(m.sigma / total, 0.0, 1.0);
  return m;
}

double superlevel_measure(const FunctionSpec& f, double r) {
  if (!(r >= 0.0)) throw Error("superlevel_measure: r must be >= 0");
  if (r == 0.0) return 0.0;
  int d = f.dim;
  // locate sign changes in [0, r], then sum the exact shell volumes of the
  // subintervals whose midpoint sign is >= 0
  auto grid = scan_grid(r, kScanPoints);
  std::vector<double> cuts{0.0};
  double prev_x = grid[0], prev_v = evaluate(f, prev_x);
  for (size_t i = 1; i < grid.size(); ++i) {
    double v = evaluate(f, grid[i]);
    if (sgn(v) != 0 && sgn(prev_v) != 0 && sgn(v) != sgn(prev_v)) {
      double a = prev_x, b = grid[i], fa = prev_v;
      while (b - a > 1e-12) {
        double m = 0.5 * (a + b), fm = evaluate(f, m);
        if (sgn(fm) == sgn(fa)) a = m, fa = fm;
        else b = m;
      }
      cuts.push_back(0.5 * (a + b));
    }
    if (sgn(v) != 0) prev_x = grid[i], prev_v = v;
  }
  cuts.push_back(r);
  double measure = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    if (evaluate(f, 0.5 * (a + b)) >= 0.0)
      measure += ball_volume(d) * (std::pow(b, d) - std::pow(a, d));
  }
  return measure;
}

std::pair<double, double> find_negative_point(const FunctionSpec& f,
                                              bool check_bound) {
  double nb = nonneg_beyond(f);
  double w = std::isfinite(nb) && nb > 0.0 ? nb : 16.0;
  auto grid = scan_grid(w, kScanPoints);
  size_t bad = grid.size();
  for (size_t i = 0; i < grid.size(); ++i)
    if (evaluate(f, grid[i]) < 0.0) { bad = i; break; }
  if (bad == grid.size())
    throw Error("find_negative_point: no negative value on the scan window");
  double x0 = grid[bad], v0 = evaluate(f, x0);
  if (bad > 0) {
    // walk the crossing down so x0 is the smallest negative radius (up to tol)
    double a = grid[bad - 1], b = grid[bad];
    while (b - a > 1e-9) {
      double m = 0.5 * (a + b);
      if (evaluate(f, m) < 0.0) b = m;
      else a = m;
    }
    x0 = b;
    v0 = evaluate(f, x0);
    if (!(v0 < 0.0)) { x0 = grid[bad]; v0 = evaluate(f, x0); }
  }
  if (check_bound) {
    int d = f.dim;
    double r = last_sign_change(f).radius;
    double cap = std::pow(r, d) - 1.0 / (2.0 * ball_volume(d));
    if (!(cap > 0.0))
      throw Error("find_negative_point: r(f)^d <= 1/(2 nu_d), bound undefined");
    if (x0 > std::pow(cap, 1.0 / d) + 1e-6)
      throw Error("find_negative_point: negative point beyond the certified "
                  "radius bound");
  }
  return {x0, v0};
}

FunctionSpec balance_scale(const FunctionSpec& f) {
  double r1 = last_sign_change(f).radius;
  double r2 = last_sign_change(fourier_transform(f)).radius;
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw Error("balance_scale: already degenerate-balanced");
  return dilate(f, std::sqrt(r1 / r2));
}

}  // namespace signlab
