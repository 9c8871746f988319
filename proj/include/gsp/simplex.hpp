#pragma once

#include <vector>

namespace gsp {

// Dense LP in the form
//   maximize c.x  subject to  A x <= b,  x >= 0,
// with every b_i >= 0 so the origin is a basic feasible point and no phase-1
// is needed. Primal simplex with Dantzig pricing; falls back to Bland's rule
// while stalled on degenerate pivots so cycling cannot occur. The final basis
// is refactorized from the original data to wash out tableau drift, giving
// residuals at machine precision on desk-scale inputs.
struct DenseLp {
  int num_vars = 0;
  std::vector<std::vector<double>> rows;  // each of size num_vars
  std::vector<double> rhs;                // parallel to rows, all >= 0
  std::vector<double> objective;          // size num_vars
};

struct SimplexResult {
  enum class Status { Optimal, Unbounded, IterationLimit };
  Status status = Status::Optimal;
  double value = 0.0;
  std::vector<double> x;
  long iterations = 0;
};

SimplexResult simplex_maximize(const DenseLp& lp);

}  // namespace gsp
