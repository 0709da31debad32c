#pragma once

#include <utility>
#include <vector>

#include "signlab/funcrep.hpp"

namespace signlab {

struct DiracComb {
  // (location, weight); symmetric under negation of locations
  std::vector<std::pair<double, double>> atoms;
};

/// The canonical three-atom comb delta_{x0} + delta_{-x0} + 2 delta_0.
DiracComb symmetric_comb(double x0);

/// g(x) = f(x-x0) + f(x+x0) + 2 f(x); ghat = (2 cos(2 pi x0 xi) + 2) fhat.
/// One-dimensional (the shifted sum of radial profiles is radial only there).
FunctionSpec dirac_symmetrize(const FunctionSpec& f, double x0);

/// h = g + ghat - ((g(0)+ghat(0))/2) exp(-pi x^2); requires g(0)+ghat(0) < 0.
FunctionSpec gaussian_correct(const FunctionSpec& g);

struct EtaResult {
  FunctionSpec eta;  // self-dual, eta(0) < 0, |x|^{d+1} eta(x) >= 1 past r0
  double A = 0.0;    // normalizing constant (computed on a finite window)
  double r0 = 0.0;   // growth certified from this radius on
  double grid_max = 0.0;  // upper end of the verification window
};

/// The self-dual correction function: with chi = 1_{B_1} * 1_{B_1},
/// p = chi * chihat, phi = FT(p), psi = phi + p, returns
/// eta = (psi - 2 psi(0) exp(-pi |x|^2)) / A with A = min of
/// |x|^{d+1}(psi - 2 psi(0) exp(-pi x^2)) over a log grid [r0, grid_max].
EtaResult build_eta(int d);

/// Bandlimit by multiplying the transform with phi_delta(xi) = phi(delta xi),
/// phi = psi_bump * psi_bump: returns g with ghat = fhat . phi_delta,
/// supp(ghat) within radius 2/delta.
FunctionSpec mollify_bandlimit(const FunctionSpec& f, double delta);

/// Schwartz smoothing h = ghat * phi_delta + g . phihat_delta with
/// g = f * phi_delta, phi_delta = phi(./delta): self-dual when fhat = f,
/// h(0) < 0 for small delta, r(h) <= r(f) + 2 delta.
FunctionSpec schwartz_smooth(const FunctionSpec& f, double delta);

/// F = fhat + s f, an s-eigenfunction of the transform (s in {+1,-1}).
FunctionSpec eigen_symmetrize(const FunctionSpec& f, int s);

}  // namespace signlab
