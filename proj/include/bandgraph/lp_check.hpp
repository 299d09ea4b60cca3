#ifndef BANDGRAPH_LP_CHECK_HPP
#define BANDGRAPH_LP_CHECK_HPP

#include "bandgraph/simplex.hpp"

namespace bandgraph {

struct CheckResult {
    bool ok = true;
    std::string detail;  // first failure, empty when ok
};

/// Independent certificate verification, straight from the LP data:
///   Optimal:    A x* <= b;  y >= 0;  A^T y = c;  y_i (b - A x*)_i = 0;
///               y^T b = x*_obj = claimed objective.
///   Infeasible: y >= 0;  A^T y = 0;  y^T b < 0.
/// Shares no code with the pivoting engine.
CheckResult check_certificates(const LinearProgram& lp, const LpOutcome& outcome);

}  // namespace bandgraph

#endif
