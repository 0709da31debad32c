#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signlab/funcrep.hpp"

namespace signlab {

struct CertificateResult {
  std::string name;
  bool passed = false;
  double margin = 0.0;  // signed slack; positive = satisfied
  std::string inputs;   // echo of the parameters
  std::string notes;
};

/// omega_{d-1} int_0^inf r^{d+1} f(r) dr; throws when the declared tail makes
/// the moment divergent.
QuadratureResult second_moment_q(const FunctionSpec& f);
double second_moment(const FunctionSpec& f);

/// Pointwise upper bound for f_+ on [0, r]:
/// 1/2 + [sin(2 pi (r - 1/4) x) - sin(2 pi r x)]/(pi x), with the x -> 0
/// limit 0.  Requires r in [1/4, 1/sqrt(2)], x in [0, r].
double lemma_two_bound(double r, double x);

/// Phi(r) = int_{1/4}^r lemma_two_bound(r, x) dx, r >= 1/4.
double phi(double r);

/// (r + 1/4) sigma (r + 1/4 - sigma) >= r/8; margin = LHS - RHS.
CertificateResult import_inequality(double r, double sigma);

/// Passes iff Phi(r_high) <= sigma_bound and import_inequality(r, sigma_bound)
/// fails for every r on the 1e-3 grid of [r_low, r_high].
CertificateResult step1_contradiction(double r_low, double r_high,
                                      double sigma_bound);

/// s = (r^d - 1/(2 nu_d))^{1/d}, t = (r^d + 1/(2 nu_d))^{1/d}: the radii
/// whose shells about r hold mass exactly 1/2.
std::pair<double, double> bathtub_radii(int d, double r);

struct BathtubResult {
  double threshold = 0.0;        // level s in the minimizer 1_{h<s} + c 1_{h=s}
  double fraction = 0.0;         // c on the marginal level set
  std::vector<double> g;         // optimal occupancy per input shell
};

/// Minimize int g h over 0 <= g <= 1, int g = G, for a radial cost h given by
/// shell samples (values[i] is the cost on [radii[i], radii[i+1])).
BathtubResult bathtub_minimize(const std::vector<double>& radii,
                               const std::vector<double>& values, int dim,
                               double G);

/// nu_d d/(d+2) (t^{d+2} + s^{d+2} - 2 r^{d+2}) with (s,t) = bathtub_radii.
CertificateResult convexity_gap(int d, double r);

/// theta = 1/(2 nu_d A_plus^d) and factor = 1 + (1 - theta)^{1/d};
/// asserts factor <= 2 - theta/d.  Requires theta < 1.
std::pair<double, double> improvement_factor(int d, double A_plus);

}  // namespace signlab
