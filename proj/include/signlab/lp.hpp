#pragma once

#include <vector>

#include "signlab/common.hpp"

namespace signlab {

enum class Relation { LE, EQ, GE };

struct LPRow {
  std::vector<double> coeffs;
  Relation rel = Relation::LE;
  double rhs = 0.0;
};

/// maximize objective . x  subject to rows and per-variable bounds
/// (bounds may be +-inf; missing bound vectors mean free variables).
struct LPProblem {
  std::vector<double> objective;
  std::vector<LPRow> rows;
  std::vector<double> lo, hi;
};

enum class LPStatus { Optimal, Infeasible, Unbounded, Stalled };

struct LPOutcome {
  LPStatus status = LPStatus::Stalled;
  double objective_value = kNaN;
  std::vector<double> solution;
  int iterations = 0;
};

/// Dense two-phase simplex; Dantzig pricing with a switch to Bland's rule
/// after a degenerate stall.  Deterministic.
LPOutcome solve_lp(const LPProblem& p);

}  // namespace signlab
