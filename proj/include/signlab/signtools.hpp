#pragma once

#include <utility>
#include <vector>

#include "signlab/funcrep.hpp"

namespace signlab {

enum class TailArgument {
  ClosedFormPositivity,   // catalog/custom fact: f >= 0 past a known radius
  PolynomialRootBound,    // eigen expansion: comrade-matrix root bound
  DecayBound,             // sampled profile: declared tail keeps the end sign
};

struct SignChangeReport {
  double radius = 0.0;  // r(f): sup of the negative set
  std::vector<std::pair<double, double>> brackets;  // isolated sign flips
  std::vector<double> touches;       // grid-detected zeros without a flip
  TailArgument tail_argument = TailArgument::ClosedFormPositivity;
  double tail_radius = 0.0;          // nonnegativity certified beyond this
  double tolerance = 0.0;
};

struct MassReport {
  double sigma = 0.0;  // omega_{d-1} int_0^r rho^{d-1} f_+(rho) drho
  double ratio = 0.0;  // sigma / ||f||_1
  double r_used = 0.0;
};

/// r(f): the radius of the last sign change, by a geometric-then-uniform scan
/// of [0, tail radius] followed by bisection.  Requires a certifiable
/// "eventually nonnegative" argument for the representation.
SignChangeReport last_sign_change(const FunctionSpec& f, double tol = 1e-9);

/// Positive-part mass inside the ball of radius r and its ratio to ||f||_1.
MassReport sigma_plus_mass(const FunctionSpec& f, double r);

/// Lebesgue measure of {x in B_r : f(|x|) >= 0} via sign brackets and exact
/// shell volumes.
double superlevel_measure(const FunctionSpec& f, double r);

/// Smallest radius with f < 0 (grid scan + bisection) and the value there.
/// With check_bound set, asserts x0 <= (r(f)^d - 1/(2 nu_d))^{1/d} + tol,
/// which presumes the caller certified ||f||_1 = 1, fhat = f, f(0) = 0.
std::pair<double, double> find_negative_point(const FunctionSpec& f,
                                              bool check_bound = false);

/// Rescale so the two last-sign-change radii match: returns f(lambda x) with
/// lambda = sqrt(r(f)/r(fhat)); both radii become sqrt(r(f) r(fhat)).
FunctionSpec balance_scale(const FunctionSpec& f);

}  // namespace signlab
