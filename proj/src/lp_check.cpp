#include "bandgraph/lp_check.hpp"

namespace bandgraph {

namespace {

CheckResult fail(const std::string& what) { return {false, what}; }

CheckResult check_optimal(const LinearProgram& lp, const LpOutcome& o) {
    size_t n = lp.vars.size(), m = lp.rows.size();
    if (o.primal.size() != n) return fail("primal size mismatch");
    if (o.dual.size() != m) return fail("dual size mismatch");

    std::vector<Scalar> slack;  // b - A x*, reused for complementarity
    slack.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        Scalar ax(0);
        for (size_t j = 0; j < n; ++j) {
            if (lp.rows[i].coeffs[j].is_zero()) continue;
            ax += lp.rows[i].coeffs[j] * o.primal[j];
        }
        Scalar s = lp.rows[i].rhs - ax;
        if (s.sign() < 0) return fail("primal violates row " + lp.rows[i].label);
        slack.push_back(std::move(s));
    }

    Scalar ytb(0);
    for (size_t i = 0; i < m; ++i) {
        if (o.dual[i].sign() < 0) return fail("negative dual on row " + lp.rows[i].label);
        if (!o.dual[i].is_zero()) ytb += o.dual[i] * lp.rows[i].rhs;
        if (!(o.dual[i] * slack[i]).is_zero())
            return fail("complementary slackness fails on row " + lp.rows[i].label);
    }

    for (size_t j = 0; j < n; ++j) {
        Scalar aty(0);
        for (size_t i = 0; i < m; ++i) {
            if (lp.rows[i].coeffs[j].is_zero() || o.dual[i].is_zero()) continue;
            aty += lp.rows[i].coeffs[j] * o.dual[i];
        }
        Scalar c = int(j) == lp.objective ? Scalar(1) : Scalar(0);
        if (aty != c) return fail("dual equality fails on variable " + lp.vars[j]);
    }

    if (o.primal[lp.objective] != o.objective) return fail("objective mismatch with primal");
    if (ytb != o.objective) return fail("strong duality gap");
    return {};
}

CheckResult check_infeasible(const LinearProgram& lp, const LpOutcome& o) {
    size_t n = lp.vars.size(), m = lp.rows.size();
    if (o.farkas.size() != m) return fail("farkas size mismatch");
    Scalar ytb(0);
    bool any = false;
    for (size_t i = 0; i < m; ++i) {
        if (o.farkas[i].sign() < 0) return fail("negative farkas weight on " + lp.rows[i].label);
        if (!o.farkas[i].is_zero()) {
            ytb += o.farkas[i] * lp.rows[i].rhs;
            any = true;
        }
    }
    if (!any) return fail("farkas combination is empty");
    for (size_t j = 0; j < n; ++j) {
        Scalar aty(0);
        for (size_t i = 0; i < m; ++i) {
            if (lp.rows[i].coeffs[j].is_zero() || o.farkas[i].is_zero()) continue;
            aty += lp.rows[i].coeffs[j] * o.farkas[i];
        }
        if (!aty.is_zero()) return fail("farkas combination touches variable " + lp.vars[j]);
    }
    if (ytb.sign() >= 0) return fail("farkas right-hand side is not negative");
    return {};
}

}  // namespace

CheckResult check_certificates(const LinearProgram& lp, const LpOutcome& outcome) {
    return outcome.status == LpStatus::Optimal ? check_optimal(lp, outcome)
                                               : check_infeasible(lp, outcome);
}

}  // namespace bandgraph
