#pragma once

#include "signlab/funcrep.hpp"

namespace signlab {

/// Fourier transform with the convention fhat(xi) = int f(x) e^{-2 pi i <x,xi>}.
/// Closed forms map through the built-in catalog, eigen expansions map
/// coefficientwise, sampled profiles go through hankel_radial_ft.
FunctionSpec fourier_transform(const FunctionSpec& f);

/// Numeric radial transform value at radius rho (any representation).
/// d=1 reduces to the cosine transform 2 int f(r) cos(2 pi r rho) dr; general
/// d uses the Bessel kernel 2 pi rho^{1-d/2} J_{d/2-1}(2 pi r rho) r^{d/2}.
/// Slowly decaying oscillatory tails are summed with period-aligned cells and
/// series acceleration.
double radial_ft_value(const FunctionSpec& f, double rho);

/// Radial transform of a sampled profile in dimension d, evaluated on
/// out_grid (default: 400 uniform points).
SampledProfile hankel_radial_ft(const SampledProfile& profile, int d,
                                std::vector<double> out_grid = {});

/// Radial convolution (f*g), via transform-multiply-invert when both
/// transforms are evaluable, direct quadrature otherwise.
SampledProfile convolve_radial(const FunctionSpec& f, const FunctionSpec& g,
                               std::vector<double> out_grid = {});

/// Direct-quadrature convolution value at a single radius (the cross-check
/// path of convolve_radial).
double convolve_direct_value(const FunctionSpec& f, const FunctionSpec& g,
                             double x);

enum class Weight { One, RadialMeasure, SecondMoment };  // 1, r^{d-1}, r^{d+1}

/// Weighted integral over [a,b] (b may be kInf; surface constants are the
/// caller's business, matching the radial-slice semantics).
QuadratureResult integrate(const FunctionSpec& f, Weight w, double a, double b);

/// True if fourier_transform(f) yields a pointwise-evaluable spec without
/// numeric tabulation.
bool has_closed_transform(const FunctionSpec& f);

/// Tabulates f on the given radii (for serialization of opaque specs).
SampledProfile sample_on_grid(const FunctionSpec& f,
                              const std::vector<double>& radii,
                              TailBound tail);

}  // namespace signlab
