#pragma once

#include <functional>
#include <map>

#include "signlab/certificates.hpp"
#include "signlab/funcrep.hpp"

namespace signlab {

/// Even trigonometric polynomial/series on the torus, stored one-sided:
/// coef[k] = ghat(k) = ghat(-k).  One-dimensional in v1.
struct TorusPolynomial {
  int dim = 1;
  std::vector<double> coef;
  double tail_l1 = 0.0;  // l1 mass of the truncated coefficients
};

/// | alpha sum_n f(alpha n + beta) - sum_k fhat(k/alpha) e^{2 pi i beta k/alpha} |
/// with both lattice sums truncated at `truncation` terms and accelerated.
double poisson_residual(const FunctionSpec& f, double alpha, double beta,
                        long truncation = 100000);

/// For bandlimited f with supp(fhat) within [-1/2, 1/2]: checks the dilated
/// Poisson consequence sum_n f((2n+1) beta) <= 0 on beta in [r(f), 1] and the
/// forced vanishing at the odd integers when r(f) = 1.
CertificateResult prop1_certificate(const FunctionSpec& f);

/// Vaaler's interpolation: g(x) = (sin pi x / pi)^2
/// (sum_m g(m)/(x-m)^2 + sum_n g'(n)/(x-n)); node evaluation by the limit.
std::function<double(double)> vaaler_interpolate(
    const std::map<int, double>& values,
    const std::map<int, double>& derivatives, long truncation = 0);

/// g on the torus with ghat(k) = s f(lambda k); requires 2 a lambda < 1 for
/// supp(fhat) within [-a, a].
TorusPolynomial periodize(const FunctionSpec& f, double lambda, int s);

struct TorusMetrics {
  double r_torus = 0.0;  // sup of the negative set in the fundamental domain
  int k_s = 1;           // min k >= 1 with s ghat(n) >= 0 for all |n| >= k
  double product = 0.0;  // r_torus * k_s
};

TorusMetrics torus_metrics(const TorusPolynomial& g, int s);

}  // namespace signlab
