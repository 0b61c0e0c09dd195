#ifndef HKIT_LP_HPP
#define HKIT_LP_HPP

#include <vector>

#include "hkit/rational.hpp"

namespace hkit {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LinRow {
  Vec a;
  Rational b;
};

// maximize objective^T x  s.t.  le_rows: a^T x <= b,  eq_rows: a^T x = b,
// x_j >= 0 for each flagged index (empty flag vector = all variables free).
struct LinearProgram {
  Vec objective;
  std::vector<LinRow> le_rows;
  std::vector<LinRow> eq_rows;
  std::vector<char> nonneg;

  std::size_t num_vars() const { return objective.size(); }
};

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  Vec solution;  // a basic feasible solution when Optimal
};

struct LPOptions {
  // Split the program into independent blocks (connected components of the
  // variable/row incidence graph) before solving. Results are identical
  // either way; block solves are much faster on separable programs.
  bool decompose = true;
};

// Exact rational simplex, two-phase, Bland's rule (anti-cycling).
LPOutcome solve_lp(const LinearProgram& lp, const LPOptions& opts = {});

// Floating-point twin of solve_lp. Used only as a screening heuristic;
// every consumer re-certifies with exact arithmetic.
struct LPOutcomeApprox {
  LPStatus status = LPStatus::Infeasible;
  double value = 0.0;
  std::vector<double> solution;
};
LPOutcomeApprox solve_lp_approx(const LinearProgram& lp, const LPOptions& opts = {});

// Explicit dual program, normalized to the same maximization form.
// Strong duality: solve_lp(lp).value == -solve_lp(dual_of(lp)).value.
LinearProgram dual_of(const LinearProgram& lp);

}  // namespace hkit

#endif
