#ifndef MAJO_LP_HPP
#define MAJO_LP_HPP

#include <vector>

#include "majo/linalg.hpp"

namespace majo {

enum class RowSense { Geq, Eq };

// Find x with A x {>=,=} b and x_j >= 0 wherever nonneg[j] is set.
struct LpFeasibilityProblem {
    Mat A;                        // k x n
    std::vector<Rat> b;           // k
    std::vector<RowSense> sense;  // k
    std::vector<bool> nonneg;     // n; false means the variable is free
};

enum class LpStatus { Feasible, Infeasible };

// Feasible: primal satisfies every constraint exactly.
// Infeasible: dual_certificate y is a Farkas witness, y >= 0 on Geq rows,
// (y^T A)_j <= 0 for non-negative variables, == 0 for free ones, y.b > 0.
struct LpOutcome {
    LpStatus status;
    std::vector<Rat> primal;
    std::vector<Rat> dual_certificate;
};

// Phase-one simplex on exact rationals with Bland's rule; the outcome is
// re-verified against the invariants above before it is returned.
LpOutcome solve_feasibility(const LpFeasibilityProblem& prob);

}  // namespace majo

#endif
