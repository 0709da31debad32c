#include "signlab/poisson_torus.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "signlab/signtools.hpp"
#include "signlab/transforms.hpp"

namespace signlab {

namespace {

// In-place iterative radix-2 FFT (size must be a power of two).
void fft(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * kPi / (double)len;
    std::complex<double> w0(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (size_t j = 0; j < len / 2; ++j, w *= w0) {
        auto u = a[i + j], v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

// sum_{n>=1} term(n), accelerated or direct depending on the declared tail.
double lattice_sum(const FunctionSpec& f, double step,
                   const std::function<double(long)>& term, long nmax) {
  TailBound tb = tail_bound(f);
  double supp = support_radius(f);
  if (std::isfinite(supp) || tb.kind == TailBound::Gauss) {
    double cut = std::isfinite(supp) ? supp : tb.cutoff(1e-18, 0);
    long last = (long)std::ceil((cut + 2.0) / step) + 2;
    double s = 0.0;
    for (long n = 1; n <= last; ++n) s += term(n);
    return s;
  }
  long block = find_block({osc_period(f) / step}, 128);
  return accelerated_series(term, nmax, block);
}

double torus_eval_direct(const TorusPolynomial& g, double x) {
  double s = g.coef.empty() ? 0.0 : g.coef[0];
  for (size_t k = 1; k < g.coef.size(); ++k)
    s += 2.0 * g.coef[k] * std::cos(2.0 * kPi * (double)k * x);
  return s;
}

}  // namespace

double poisson_residual(const FunctionSpec& f, double alpha, double beta,
                        long truncation) {
  if (!(alpha > 0.0)) throw Error("poisson_residual: alpha must be positive");
  beta = std::abs(beta);
  auto lhs_term = [&](long n) {
    return evaluate(f, alpha * n + beta) + evaluate(f, alpha * n - beta);
  };
  double lhs =
      alpha * (evaluate(f, beta) + lattice_sum(f, alpha, lhs_term, truncation));

  const FunctionSpec tf = fourier_transform(f);
  double rhs;
  double b = band_radius(f);
  if (std::isfinite(b)) {
    long K = (long)std::floor(b * alpha + 1e-9);
    rhs = evaluate(tf, 0.0);
    for (long k = 1; k <= K; ++k)
      rhs += 2.0 * evaluate(tf, k / alpha) *
             std::cos(2.0 * kPi * beta * k / alpha);
  } else {
    auto rhs_term = [&](long k) {
      return 2.0 * evaluate(tf, k / alpha) *
             std::cos(2.0 * kPi * beta * k / alpha);
    };
    TailBound tb = tail_bound(tf);
    if (!std::isfinite(support_radius(tf)) && tb.kind == TailBound::Decay &&
        tb.p <= 1.0)
      throw Error("poisson_residual: transform lattice sum not summable");
    // dominant periods in k: the transform's own oscillation and the
    // exponential factor (period alpha/beta)
    std::vector<double> periods{osc_period(tf) * alpha};
    if (beta > 1e-12) periods.push_back(alpha / beta);
    long block = find_block(periods, 128);
    rhs = evaluate(tf, 0.0) + accelerated_series(rhs_term, truncation, block);
  }
  return std::abs(lhs - rhs);
}

CertificateResult prop1_certificate(const FunctionSpec& f) {
  double b = band_radius(f);
  if (!(b <= 0.5 + 1e-12))
    throw Error("prop1_certificate: not bandlimited within [-1/2, 1/2]");
  CertificateResult out;
  out.name = "prop1_certificate";
  double r = last_sign_change(f).radius;
  {
    std::ostringstream os;
    os << "{\"r_claimed\": " << r << "}";
    out.inputs = os.str();
  }
  // sum_n f((2n+1) beta) = fhat(0)/(2 beta) <= 0 for beta in [r, 1]; all
  // summands are nonnegative there, so the sums must vanish
  double worst = -kInf;
  int n_beta = r >= 1.0 - 1e-9 ? 1 : 41;
  for (int i = 0; i < n_beta; ++i) {
    double beta = n_beta == 1 ? 1.0 : r + (1.0 - r) * i / (n_beta - 1.0);
    auto term = [&](long n) { return evaluate(f, (2 * n + 1) * beta); };
    double s = 2.0 * (evaluate(f, beta) +
                      lattice_sum(f, 2.0 * beta, term, 100000));
    worst = std::max(worst, s);
  }
  out.margin = -worst;
  out.passed = worst <= 1e-7;
  std::ostringstream os;
  os << "max odd-lattice sum " << worst;
  if (r < 1.0 - 1e-9)
    os << "; r < 1 forces vanishing on a non-degenerate interval";
  else {
    double vmax = 0.0;
    for (int n = 0; n <= 100; ++n)
      vmax = std::max(vmax, std::abs(evaluate(f, 2.0 * n + 1.0)));
    os << "; max |f(2n+1)| for n <= 100: " << vmax;
    out.passed = out.passed && vmax <= 1e-9;
  }
  out.notes = os.str();
  return out;
}

std::function<double(double)> vaaler_interpolate(
    const std::map<int, double>& values,
    const std::map<int, double>& derivatives, long truncation) {
  (void)truncation;  // finite sample maps only in v1
  auto vals = values;
  auto ders = derivatives;
  return [vals, ders](double x) {
    long m0 = std::lround(x);
    if (std::abs(x - (double)m0) < 1e-6) {
      double v = 0.0, d = 0.0;
      if (auto it = vals.find((int)m0); it != vals.end()) v = it->second;
      if (auto it = ders.find((int)m0); it != ders.end()) d = it->second;
      return v + d * (x - (double)m0);
    }
    double s = 0.0;
    for (auto& [m, v] : vals) s += v / ((x - m) * (x - m));
    for (auto& [n, d] : ders) s += d / (x - n);
    double k = std::sin(kPi * x) / kPi;
    return k * k * s;
  };
}

TorusPolynomial periodize(const FunctionSpec& f, double lambda, int s) {
  if (s != 1 && s != -1) throw Error("periodize: s must be +-1");
  if (!(lambda > 0.0)) throw Error("periodize: lambda must be positive");
  if (f.dim != 1) throw Error("periodize: one-dimensional in v1");
  double a = band_radius(f);
  if (!std::isfinite(a)) throw Error("periodize: not bandlimited");
  if (!(2.0 * a * lambda < 1.0))
    throw Error("periodize: aliasing (2 a lambda >= 1)");
  const long cap = 100000;
  TorusPolynomial g;
  g.dim = 1;
  g.coef.reserve(cap + 1);
  double vmax = std::abs(evaluate(f, 0.0));
  long k = 0;
  for (; k <= cap; ++k) {
    double v = evaluate(f, lambda * k);
    vmax = std::max(vmax, std::abs(v));
    g.coef.push_back(s * v);
    if (std::abs(v) < 1e-14 * vmax && k > 16) {
      TailBound tb = tail_bound(f);
      bool settled = tb.kind != TailBound::Decay;  // power tails keep coming
      if (settled) break;
    }
  }
  TailBound tb = tail_bound(f);
  if ((long)g.coef.size() > cap && tb.kind == TailBound::Decay) {
    if (tb.p <= 1.0) throw Error("periodize: coefficients not summable");
    g.tail_l1 = 2.0 * tb.c * std::pow(lambda, -tb.p) *
                std::pow((double)cap, 1.0 - tb.p) / (tb.p - 1.0);
  }
  return g;
}

TorusMetrics torus_metrics(const TorusPolynomial& g, int s) {
  if (s != 1 && s != -1) throw Error("torus_metrics: s must be +-1");
  if (g.dim != 1) throw Error("torus_metrics: one-dimensional in v1");
  TorusMetrics out;
  double amax = 1e-300;
  for (double c : g.coef) amax = std::max(amax, std::abs(c));

  // k_s straight from the coefficients (exact data)
  long bad = 0;
  for (long k = (long)g.coef.size() - 1; k >= 1; --k)
    if (s * g.coef[k] < -1e-12 * amax) { bad = k; break; }
  out.k_s = (int)bad + 1;

  // dense scan of [0, 1/2] by folding the coefficients mod M, then FFT
  const size_t M = 1 << 14;
  std::vector<std::complex<double>> grid(M, 0.0);
  for (size_t k = 0; k < g.coef.size(); ++k) {
    grid[k % M] += g.coef[k];
    if (k >= 1) grid[(M - k % M) % M] += g.coef[k];
  }
  fft(grid);
  double neg_tol = g.tail_l1 + 1e-9 * amax;
  size_t last = M;  // index of the last grid point below -neg_tol, M if none
  for (size_t j = 0; j <= M / 2; ++j)
    if (grid[j].real() < -neg_tol) last = j;
  if (last == M) return out;  // nonnegative everywhere (within tolerance)
  double lo = (double)last / M;
  double hi = std::min(0.5, (double)(last + 1) / M);
  while (hi - lo > 1e-9) {
    double m = 0.5 * (lo + hi);
    if (torus_eval_direct(g, m) < -neg_tol) lo = m;
    else hi = m;
  }
  out.r_torus = 0.5 * (lo + hi);
  out.product = out.r_torus * out.k_s;
  return out;
}

}  // namespace signlab
