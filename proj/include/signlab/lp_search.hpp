#pragma once

#include <tuple>
#include <vector>

#include "signlab/funcrep.hpp"
#include "signlab/lp.hpp"
#include "signlab/signtools.hpp"

namespace signlab {

struct SearchResult {
  int sign = -1;
  int dim = 1;
  int degree = 0;
  double r_upper = kNaN;
  FunctionSpec candidate;             // eigen expansion, candidate(0) ~ 0
  SignChangeReport verification;      // re-check of the candidate's r(f)
  std::vector<std::tuple<double, double, bool>> trace;  // (r, slack t, feasible)
};

/// Feasibility LP at radius r over the s-parity eigen basis up to degree m:
/// maximize t with sum c_k ell_k(0) = 0, f >= t on a dense window [r, 2r],
/// f >= 0 on Chebyshev points of (2r, R], s c_last >= 1e-3 t, |c_k| <= 1.
/// Feasible iff the optimum exceeds 1e-7.
LPOutcome feasibility_at_radius(int d, int s, double r, int m,
                                int window_pts = 200, int outer_pts = 200);

/// Assemble the eigen-expansion spec from an LP solution (coefficients in
/// parity order, the trailing entry being the t variable is dropped).
FunctionSpec expansion_from_solution(int d, int s, int m,
                                     const std::vector<double>& solution);

/// Bisect the smallest radius with a feasible LP certificate; the candidate is
/// re-verified with last_sign_change, widening the grid once on mismatch.
SearchResult bisect_min_radius(int d, int s, int m, double tol);

}  // namespace signlab
