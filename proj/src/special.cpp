#include "signlab/special.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace signlab {

namespace {

bool is_integer(double v) { return v == std::floor(v); }

// Ascending power series, safe when there is no catastrophic cancellation
// (x modest or first term dominant).
double bessel_series(double nu, double x) {
  long double q = 0.25L * (long double)x * (long double)x;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m < 400; ++m) {
    term *= -q / ((long double)m * (m + (long double)nu));
    sum += term;
    if (std::abs((double)term) < 1e-20 * std::abs((double)sum) && m > 4) break;
  }
  long double lp = (long double)nu * std::log((long double)x / 2.0L) -
                   std::lgamma((long double)nu + 1.0L);
  return (double)(sum * std::exp(lp));
}

// Miller backward recurrence: returns J_nu(x) for x >= 2.
double bessel_miller(double nu, double x) {
  const bool half = !is_integer(nu);
  const double frac = half ? 0.5 : 0.0;
  const int n_target = (int)std::floor(nu - frac + 0.5);
  const int m_start =
      (int)std::ceil(std::max(nu, x)) + 26 + (int)(0.08 * x);
  // Orders nu_k = k + frac, k = 0..m_start.
  std::vector<double> j(m_start + 2, 0.0);
  j[m_start + 1] = 0.0;
  j[m_start] = 1e-300;
  for (int k = m_start; k >= 1; --k) {
    double ord = k + frac;
    j[k - 1] = (2.0 * ord / x) * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > 1e280) {
      for (int i = k - 1; i <= m_start + 1; ++i) j[i] *= 1e-280;
    }
  }
  double scale;
  if (!half) {
    // 1 = J_0 + 2*(J_2 + J_4 + ...)
    double norm = j[0];
    for (int k = 2; k <= m_start; k += 2) norm += 2.0 * j[k];
    scale = 1.0 / norm;
  } else {
    double j_half = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
    double j_3half =
        std::sqrt(2.0 / (kPi * x)) * (std::sin(x) / x - std::cos(x));
    // Normalize against whichever reference value is better conditioned.
    if (std::abs(j_half) >= std::abs(j_3half))
      scale = j_half / j[0];
    else
      scale = j_3half / j[1];
  }
  return j[n_target] * scale;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(nu >= 0.0) || !is_integer(2.0 * nu))
    throw Error("bessel_j: order must be a nonnegative half-integer");
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error("bessel_j: bad argument");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x < 2.0 || x * x < nu) return bessel_series(nu, x);
  return bessel_miller(nu, x);
}

double laguerre_l(int k, double alpha, double u) {
  if (k < 0) throw Error("laguerre_l: negative degree");
  double lm1 = 1.0;
  if (k == 0) return lm1;
  double l = 1.0 + alpha - u;
  for (int i = 1; i < k; ++i) {
    double lp1 = ((2.0 * i + 1.0 + alpha - u) * l - (i + alpha) * lm1) /
                 (i + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<double> laguerre_all(int m, double alpha, double u) {
  std::vector<double> out(m + 1);
  out[0] = 1.0;
  if (m == 0) return out;
  out[1] = 1.0 + alpha - u;
  for (int i = 1; i < m; ++i)
    out[i + 1] =
        ((2.0 * i + 1.0 + alpha - u) * out[i] - (i + alpha) * out[i - 1]) /
        (i + 1.0);
  return out;
}

namespace {

// log of ||L_k^{(d/2-1)}(2 pi x^2) e^{-pi x^2}||_{L^2(R^d)}^2
double log_norm_sq(int k, int d) {
  double hd = 0.5 * d;
  return -hd * std::log(2.0) + std::lgamma(k + hd) - std::lgamma(hd) -
         std::lgamma(k + 1.0);
}

}  // namespace

double eigen_basis_value(int k, int d, double x) {
  double u = 2.0 * kPi * x * x;
  double l = laguerre_l(k, 0.5 * d - 1.0, u);
  return l * std::exp(-kPi * x * x - 0.5 * log_norm_sq(k, d));
}

std::vector<double> eigen_basis_all(int m, int d, double x) {
  double u = 2.0 * kPi * x * x;
  std::vector<double> l = laguerre_all(m, 0.5 * d - 1.0, u);
  for (int k = 0; k <= m; ++k)
    l[k] *= std::exp(-kPi * x * x - 0.5 * log_norm_sq(k, d));
  return l;
}

double laguerre_root_bound(const std::vector<double>& c, double alpha) {
  int m = (int)c.size() - 1;
  while (m >= 0 && c[m] == 0.0) --m;
  if (m <= 0) return 0.0;
  // Comrade matrix for the recurrence
  //   u L_k = -(k+1) L_{k+1} + (2k+alpha+1) L_k - (k+alpha) L_{k-1},
  // with L_m eliminated through the polynomial sum_{k<=m} c_k L_k.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    A(k, k) = 2.0 * k + alpha + 1.0;
    if (k > 0) A(k, k - 1) = -(k + alpha);
    if (k + 1 < m) A(k, k + 1) = -(k + 1.0);
  }
  for (int k = 0; k < m; ++k) A(m - 1, k) += (double)m * c[k] / c[m];
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
  double bound = 0.0;
  for (int i = 0; i < m; ++i) {
    auto ev = es.eigenvalues()[i];
    bound = std::max(bound, ev.real() + std::abs(ev.imag()));
  }
  return std::max(bound, 0.0);
}

}  // namespace signlab
