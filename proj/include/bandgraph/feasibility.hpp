#ifndef BANDGRAPH_FEASIBILITY_HPP
#define BANDGRAPH_FEASIBILITY_HPP

#include <optional>

#include "bandgraph/geometry.hpp"
#include "bandgraph/lp.hpp"
#include "bandgraph/simplex.hpp"

namespace bandgraph {

enum class SolveMode { Fast, Certified };

/// Raised when the sign-case count 4^(n(n-1)/2 - 1) is out of reach; the
/// solver is sized for at most 5 lines.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A feasible witness: the configuration extracted from the LP optimum,
/// re-verified through the geometry module independently of the LP pipeline.
struct Certificate {
    Configuration config;
    SignCase sign_case;
    Scalar margin;  // delta* > 0
    AchievedRadii achieved;
    uint64_t case_index = 0;
};

struct SolveStats {
    uint64_t cases_solved = 0;          // leaf programs solved exactly
    uint64_t cases_pruned = 0;          // cases covered by pruned prefixes
    uint64_t prefix_lps = 0;            // internal-node programs solved exactly
    uint64_t float_screens = 0;         // heuristic double-precision solves
    uint64_t certificates_checked = 0;  // independent checker runs
    uint64_t certificate_failures = 0;  // must stay 0
    bool advisory = false;  // set when an infeasible answer rests on the float screen
    double wall_ms = 0.0;

    void absorb(const SolveStats& s);
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<Certificate> witness;
    SolveStats stats;
};

struct SolveOptions {
    SolveMode mode = SolveMode::Certified;
    unsigned jobs = 0;  // 0 = hardware concurrency
    Scalar box = Scalar(1);
    bool verify_certificates = true;  // independent check of every exact outcome
};

/// Does some sign case admit delta* > 0 for (g, R)? Certified mode proves
/// either answer exactly; fast mode float-screens the cases and exactly
/// confirms only a found witness, so its "infeasible" is advisory.
FeasibilityResult feasible(const Graph& g, const Scalar& R, const SolveOptions& opts = {});

struct RmaxResult {
    enum class Status { Bracketed, ExceedsCap, NotRealizable };
    Status status = Status::Bracketed;
    double lo = 0.0;  // feasible at lo (exactly confirmed witness)
    double hi = 0.0;  // infeasible at hi (advisory in fast mode)
    std::optional<Certificate> witness;
    SolveStats stats;
    int probes = 0;
};

/// Monotone bisection of R |-> feasible(g, R) on [1, rcap]; every probe
/// radius is converted to an exact dyadic rational before any LP is built.
RmaxResult rmax(const Graph& g, double tol, double rcap, const SolveOptions& opts = {});

enum class BoundarySide { At, Below };

/// Fully certified feasibility at an exact algebraic radius: side At tests
/// R itself, side Below tests R - gap.
FeasibilityResult check_exact_boundary(const Graph& g, const Scalar& R, BoundarySide side,
                                       const Scalar& gap = Scalar(0),
                                       const SolveOptions& opts = {});

/// Exact interval-Newton refinement of the single root of an integer
/// polynomial (coefficients in ascending degree) inside [lo, hi], where
/// f(lo) and f(hi) have opposite signs. Returns an enclosing interval of
/// width <= tol.
std::pair<mpq_class, mpq_class> refine_root_interval_newton(const std::vector<long>& coeffs,
                                                            mpq_class lo, mpq_class hi,
                                                            const mpq_class& tol);

/// JSON report for a feasibility run, in the documented schema.
std::string feasibility_report_json(const Graph& g, const Scalar& R,
                                    const FeasibilityResult& res, SolveMode mode);

}  // namespace bandgraph

#endif
