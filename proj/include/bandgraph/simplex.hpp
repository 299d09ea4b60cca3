#ifndef BANDGRAPH_SIMPLEX_HPP
#define BANDGRAPH_SIMPLEX_HPP

#include "bandgraph/lp.hpp"

namespace bandgraph {

enum class LpStatus { Optimal, Infeasible };

/// Exact solver outcome. Optimal carries a primal point and dual multipliers
/// with A^T y = c, y >= 0, y^T b = objective (strong duality); Infeasible
/// carries Farkas multipliers with A^T y = 0, y >= 0, y^T b < 0, a
/// non-negative combination of the rows reading 0 <= -1 after scaling.
struct LpOutcome {
    LpStatus status = LpStatus::Optimal;
    Scalar objective;
    std::vector<Scalar> primal;  // per variable (Optimal only)
    std::vector<Scalar> dual;    // per row (Optimal only)
    std::vector<Scalar> farkas;  // per row (Infeasible only)
    int pivots = 0;
};

/// Two-phase primal simplex over the LP's quadratic extension, Bland's rule
/// throughout (deterministic, cycling-free). Free variables are handled by a
/// positive/negative split. Throws on unbounded input, which box rows make
/// impossible for margin LPs.
LpOutcome simplex_solve(const LinearProgram& lp);

/// Double-precision run of the same pivoting scheme, used as a heuristic
/// pre-screen in fast mode. Never produces certificates.
struct FloatOutcome {
    bool feasible = false;   // advisory
    double objective = 0.0;  // advisory delta*
    int pivots = 0;
};
FloatOutcome simplex_solve_float(const LinearProgram& lp);

}  // namespace bandgraph

#endif
