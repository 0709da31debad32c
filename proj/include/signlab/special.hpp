#pragma once

#include <vector>

#include "signlab/common.hpp"

namespace signlab {

/// Bessel function of the first kind, half-integer order nu >= 0, x >= 0.
/// Power series for small arguments, Miller's backward recurrence elsewhere
/// (normalized by the even-order sum identity for integer nu, by the
/// spherical closed forms for half-odd nu).
double bessel_j(double nu, double x);

/// Generalized Laguerre polynomial L_k^{(alpha)}(u) by the three-term
/// recurrence.
double laguerre_l(int k, double alpha, double u);

/// Values L_0..L_m at u in one recurrence pass.
std::vector<double> laguerre_all(int m, double alpha, double u);

/// Radial Fourier eigenfunction basis: ell_k(x) in dimension d, the unit-L2
/// multiple of L_k^{(d/2-1)}(2 pi x^2) exp(-pi x^2).  Fourier eigenvalue of
/// ell_k is (-1)^k.
double eigen_basis_value(int k, int d, double x);

/// All basis values ell_0..ell_m at x.
std::vector<double> eigen_basis_all(int m, int d, double x);

/// Upper bound for the largest |root| in u = 2 pi x^2 of sum_k c_k L_k^{(nu)}(u)
/// via the comrade-matrix eigenvalues; returns 0 for constant polynomials.
/// Coefficients are in the *unnormalized* Laguerre basis.
double laguerre_root_bound(const std::vector<double>& c, double alpha);

}  // namespace signlab
