#include "signlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace signlab {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (nonnegative half; nodes are symmetric).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

// 15-point Gauss-Legendre (nonnegative half).
constexpr double kXgl[8] = {
    0.0,                0.2011940939974345, 0.3941513470775634,
    0.5709721726085388, 0.7244177313601700, 0.8482065834104272,
    0.9372733924007059, 0.9879925180204854};
constexpr double kWgl[8] = {
    0.2025782419255613, 0.1984314853271116, 0.1861610000155622,
    0.1662692058169939, 0.1395706779261543, 0.1071592204671719,
    0.0703660474881081, 0.0307532419961173};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RealFn& f, double a, double b) {
  const double m = 0.5 * (a + b), h = 0.5 * (b - a);
  double kron = 0.0, gauss = 0.0;
  double fc = f(m);
  kron += kWgk[7] * fc;
  gauss += kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double fa = f(m - h * kXgk[i]);
    double fb = f(m + h * kXgk[i]);
    kron += kWgk[i] * (fa + fb);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fa + fb);
  }
  kron *= h;
  gauss *= h;
  double err = std::pow(200.0 * std::abs(kron - gauss), 1.5);
  err = std::min(err, std::abs(kron - gauss));
  // Floor the indicator at roundoff scale of the integrand magnitude.
  return {a, b, kron, std::max(err, 1e-16 * std::abs(kron))};
}

}  // namespace

double gauss15(const RealFn& f, double a, double b) {
  const double m = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = kWgl[0] * f(m);
  for (int i = 1; i < 8; ++i)
    s += kWgl[i] * (f(m - h * kXgl[i]) + f(m + h * kXgl[i]));
  return h * s;
}

QuadratureResult integrate_adaptive(const RealFn& f, double a, double b,
                                    double abs_tol, double rel_tol,
                                    int max_intervals) {
  QuadratureResult out;
  if (a == b) return out;
  std::priority_queue<Segment> heap;
  Segment s0 = gk15(f, a, b);
  out.evaluations = 15;
  double total = s0.value, total_err = s0.error;
  heap.push(s0);
  int n = 1;
  while (n < max_intervals) {
    double tol = std::max(abs_tol, rel_tol * std::abs(total));
    if (total_err <= tol) break;
    Segment worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);  // interval at roundoff width; cannot split further
      break;
    }
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n;
  }
  out.value = total;
  out.error_estimate = total_err;
  if (!std::isfinite(total) ||
      (total_err > std::max(abs_tol, rel_tol * std::abs(total)) * 1e6 &&
       total_err > 1e-6))
    throw Error("integrate_adaptive: refinement did not converge");
  return out;
}

double wynn_epsilon(const std::vector<double>& partial_sums) {
  if (partial_sums.empty()) throw Error("wynn_epsilon: empty input");
  std::vector<double> cur(partial_sums);
  std::vector<double> prev(partial_sums.size() + 1, 0.0);
  double best = cur.back();
  int col = 0;
  while (cur.size() >= 2) {
    std::vector<double> nxt(cur.size() - 1);
    for (size_t j = 0; j + 1 < cur.size(); ++j) {
      double d = cur[j + 1] - cur[j];
      nxt[j] = prev[j + 1] + (d != 0.0 ? 1.0 / d : 0.0);
    }
    ++col;
    prev.swap(cur);
    cur.swap(nxt);
    if (col % 2 == 0 && !cur.empty()) best = cur.back();
  }
  return best;
}

double neville_to_zero(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size() || x.empty())
    throw Error("neville_to_zero: bad input");
  const size_t n = x.size();
  for (size_t k = 1; k < n; ++k)
    for (size_t j = 0; j + k < n; ++j)
      y[j] = y[j + 1] + (y[j] - y[j + 1]) * (0.0 - x[j + k]) / (x[j] - x[j + k]);
  return y[0];
}

double oscillatory_tail(const RealFn& k, double r0, double cell, int ncell,
                        int table) {
  std::vector<double> sums;
  sums.reserve(ncell);
  double acc = 0.0;
  for (int j = 0; j < ncell; ++j) {
    acc += gauss15(k, r0 + j * cell, r0 + (j + 1) * cell);
    sums.push_back(acc);
  }
  if ((int)sums.size() > table)
    sums.erase(sums.begin(), sums.end() - table);
  return wynn_epsilon(sums);
}

double richardson_tail(const RealFn& k, double r0, double cell, int levels) {
  std::vector<double> xs, ys;
  double acc = 0.0, r = r0;
  for (int j = 1; j < levels; ++j) {
    double target = r0 * std::pow(2.0, j);
    while (r < target - 1e-9) {
      acc += gauss15(k, r, r + cell);
      r += cell;
    }
    xs.push_back(1.0 / target);
    ys.push_back(acc);
  }
  return neville_to_zero(xs, ys);
}

double accelerated_series(const std::function<double(long)>& term, long nmax,
                          long block) {
  if (block < 1) block = 1;
  // Aligned checkpoints nmax/2^j (largest first internally, computed in one
  // ascending pass over the terms).
  std::vector<long> checkpoints;
  long n = nmax;
  for (int j = 0; j < 8 && n >= 8 * block; ++j) {
    checkpoints.push_back((n / block) * block);
    n /= 2;
  }
  if (checkpoints.empty()) {  // small sum: direct
    double s = 0.0;
    for (long i = 1; i <= nmax; ++i) s += term(i);
    return s;
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  std::vector<double> xs, ys;
  double s = 0.0;
  long next = 0;
  size_t ci = 0;
  for (long i = 1; i <= checkpoints.back(); ++i) {
    s += term(i);
    if (ci < checkpoints.size() && i == checkpoints[ci]) {
      xs.push_back(1.0 / (double)i);
      ys.push_back(s);
      ++ci;
    }
  }
  (void)next;
  return neville_to_zero(xs, ys);
}

long find_block(const std::vector<double>& periods, long limit) {
  for (long L = 1; L <= limit; ++L) {
    bool ok = true;
    for (double p : periods) {
      if (!(p > 0.0) || !std::isfinite(p)) continue;
      double q = L / p;
      if (std::abs(q - std::round(q)) > 1e-9 * std::max(1.0, q)) {
        ok = false;
        break;
      }
    }
    if (ok) return L;
  }
  return limit / 2;
}

}  // namespace signlab
