#pragma once

#include <functional>
#include <vector>

#include "signlab/common.hpp"

namespace signlab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error_estimate += o.error_estimate;
    evaluations += o.evaluations;
    return *this;
  }
};

using RealFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 7/15 on [a,b].  Splits the worst interval until the
/// summed error indicator drops below max(abs_tol, rel_tol*|value|) or the
/// interval budget runs out (then throws if the indicator is still far off).
QuadratureResult integrate_adaptive(const RealFn& f, double a, double b,
                                    double abs_tol = 1e-12,
                                    double rel_tol = 1e-12,
                                    int max_intervals = 4000);

/// Fixed 15-point Gauss-Legendre rule on [a,b] (no error estimate).
double gauss15(const RealFn& f, double a, double b);

/// Wynn epsilon extrapolation of a sequence of partial sums; returns the last
/// entry of the deepest even column.
double wynn_epsilon(const std::vector<double>& partial_sums);

/// Neville polynomial extrapolation of y(x) to x=0.
double neville_to_zero(std::vector<double> x, std::vector<double> y);

/// Integral of an oscillatory, slowly decaying kernel k over [r0, inf).
/// The tail is covered by `ncell` cells of length `cell` integrated with
/// gauss15 and the partial sums accelerated by Wynn epsilon over the last
/// `table` consecutive sums.  `cell` must be aligned with the integrand's
/// dominant oscillation for the acceleration to be effective; half a period
/// makes the partial sums alternate, which the table resolves best.
double oscillatory_tail(const RealFn& k, double r0, double cell,
                        int ncell = 200, int table = 80);

/// Same tail integral by Richardson/Neville extrapolation of the partial
/// integrals at cutoffs r0*2^j, j=1..levels-1 (cells of length `cell`).
/// Used where the epsilon table degenerates (resonant frequencies).
double richardson_tail(const RealFn& k, double r0, double cell,
                       int levels = 9);

/// Accelerated value of sum_{n>=1} term(n).  Partial sums are taken at
/// checkpoints nmax/2^j aligned down to multiples of `block` and extrapolated
/// in 1/N.  `block` should make term(n) roughly periodic over a block.
double accelerated_series(const std::function<double(long)>& term, long nmax,
                          long block);

/// Smallest block length in [1,limit] such that block is nearly an integer
/// multiple of every period in `periods` (zero/ignored entries skipped).
long find_block(const std::vector<double>& periods, long limit = 128);

}  // namespace signlab
