#include <doctest.h>

#include "bandgraph/configs.hpp"
#include "bandgraph/feasibility.hpp"

using namespace bandgraph;

namespace {

Scalar surd(long an, long ad, long bn, long bd, long d) {
    mpq_class a(an, ad), b(bn, bd);
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), d);
}

SolveOptions fast_opts() {
    SolveOptions o;
    o.mode = SolveMode::Fast;
    return o;
}

}  // namespace

TEST_CASE("A4 is feasible at R = 2 in both modes") {
    Graph g = Graph::catalog("A4");
    for (SolveMode mode : {SolveMode::Certified, SolveMode::Fast}) {
        SolveOptions opts;
        opts.mode = mode;
        FeasibilityResult res = feasible(g, Scalar(2), opts);
        CHECK(res.feasible);
        REQUIRE(res.witness);
        const Certificate& c = *res.witness;
        CHECK(c.margin.sign() > 0);
        CHECK(verify_realization(c.config, g, Scalar(1), Scalar(2), RegionKind::Band).ok());
        REQUIRE(c.achieved.nonedge_min);
        CHECK(*c.achieved.nonedge_min > Scalar(2));
        CHECK(res.stats.certificate_failures == 0);
        CHECK(!res.stats.advisory);
    }
}

TEST_CASE("A4 is certified infeasible at R = 6 with full accounting") {
    Graph g = Graph::catalog("A4");
    FeasibilityResult res = feasible(g, Scalar(6), SolveOptions{});
    CHECK(!res.feasible);
    CHECK(res.stats.cases_solved + res.stats.cases_pruned == 1024);
    CHECK(res.stats.certificates_checked > 0);
    CHECK(res.stats.certificate_failures == 0);
    CHECK(!res.stats.advisory);
}

TEST_CASE("feasible() edge cases") {
    FeasibilityResult one = feasible(Graph(1), Scalar(7));
    CHECK(one.feasible);
    CHECK(one.witness->config.size() == 1);

    CHECK_THROWS_AS(feasible(Graph::catalog("A4"), Scalar::fraction(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(feasible(Graph::catalog("A6"), Scalar(2)), ResourceCapError);
}

TEST_CASE("complete graphs have no outer constraint") {
    Graph k3(3);
    for (auto [i, j] : k3.pairs()) k3.add_edge(i, j);
    FeasibilityResult res = feasible(k3, Scalar(1000), SolveOptions{});
    CHECK(res.feasible);
    CHECK(!res.witness->achieved.nonedge_min);  // vacuous minimum
}

TEST_CASE("determinism of witnesses and stats") {
    Graph g = Graph::catalog("A4");
    SolveOptions opts;
    opts.jobs = 2;
    FeasibilityResult r1 = feasible(g, Scalar(3), opts);
    FeasibilityResult r2 = feasible(g, Scalar(3), opts);
    REQUIRE(r1.feasible);
    REQUIRE(r2.feasible);
    CHECK(r1.witness->config.to_json() == r2.witness->config.to_json());
    CHECK(r1.witness->case_index == r2.witness->case_index);
    CHECK(r1.witness->sign_case == r2.witness->sign_case);
    CHECK(r1.stats.cases_solved == r2.stats.cases_solved);
    CHECK(r1.stats.cases_pruned == r2.stats.cases_pruned);
}

TEST_CASE("feasibility is monotone in R on samples") {
    Graph g = Graph::catalog("A4");
    bool prev = true;
    for (long r : {2, 3, 5, 6, 7}) {  // crosses the A4 threshold 3+2*sqrt(2)
        bool cur = feasible(g, Scalar(r), fast_opts()).feasible;
        if (!prev) CHECK(!cur);
        prev = cur;
    }
    CHECK(feasible(g, Scalar(5), fast_opts()).feasible);
    CHECK(!feasible(g, Scalar(6), fast_opts()).feasible);
}

TEST_CASE("rmax on A4 brackets 3+2*sqrt(2) in fast mode") {
    RmaxResult res = rmax(Graph::catalog("A4"), 1e-4, 10, fast_opts());
    REQUIRE(res.status == RmaxResult::Status::Bracketed);
    double target = 3 + 2 * std::sqrt(2.0);
    CHECK(res.lo <= target);
    CHECK(target <= res.hi + 1e-12);
    CHECK(res.hi - res.lo <= 1e-4);
    REQUIRE(res.witness);
    CHECK(res.witness->margin.sign() > 0);
    CHECK(res.stats.advisory);  // the infeasible probes rest on the float screen
}

TEST_CASE("rmax status taxonomy") {
    // no non-edges: feasible at any radius
    Graph k3(3);
    for (auto [i, j] : k3.pairs()) k3.add_edge(i, j);
    RmaxResult cap = rmax(k3, 1e-3, 50, fast_opts());
    CHECK(cap.status == RmaxResult::Status::ExceedsCap);
    CHECK(cap.lo == 50.0);
    CHECK(std::isinf(cap.hi));
    CHECK(cap.witness);

    // A3's only non-edge can sit on parallel lines: feasible for every R
    RmaxResult a3 = rmax(Graph::catalog("A3"), 1e-3, 25, fast_opts());
    CHECK(a3.status == RmaxResult::Status::ExceedsCap);

    // C5 is not band-realizable at all (advisory in fast mode)
    RmaxResult c5 = rmax(Graph::catalog("C5"), 1e-3, 4, fast_opts());
    CHECK(c5.status == RmaxResult::Status::NotRealizable);
}

TEST_CASE("check_exact_boundary plumbing over Q(sqrt(2))") {
    Graph g = Graph::catalog("A4");
    Scalar boundary = surd(3, 1, 2, 1, 2);  // 3 + 2*sqrt(2)

    FeasibilityResult below =
        check_exact_boundary(g, boundary, BoundarySide::Below, Scalar::fraction(1, 2));
    CHECK(below.feasible);
    CHECK(below.witness->config.ext() == 2);  // witness lives in Q(sqrt(2))
    CHECK(!below.stats.advisory);

    CHECK_THROWS_AS(check_exact_boundary(g, boundary, BoundarySide::Below, Scalar(0)),
                    std::invalid_argument);
}

TEST_CASE("interval Newton refines the G3 cubic root") {
    std::vector<long> poly{-1, -9, 1, 1};  // x^3 + x^2 - 9x - 1, ascending
    // sign change on the bracket from the paper's stated window
    mpq_class lo(26, 10), hi(261, 100);
    auto eval = [&](const mpq_class& x) {
        mpq_class acc = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    REQUIRE(sgn(eval(lo)) < 0);
    REQUIRE(sgn(eval(hi)) > 0);

    mpq_class tol(1, 1000000000);
    auto [rlo, rhi] = refine_root_interval_newton(poly, lo, hi, tol);
    CHECK(rhi - rlo <= tol);
    CHECK(sgn(eval(rlo)) <= 0);
    CHECK(sgn(eval(rhi)) >= 0);
    double root = mpq_get_d(rlo.get_mpq_t());
    CHECK(root == doctest::Approx(2.6004).epsilon(1e-4));

    CHECK_THROWS(refine_root_interval_newton(poly, mpq_class(0), mpq_class(1), tol));  // no change
}

TEST_CASE("feasibility report schema") {
    Graph g = Graph::catalog("A4");
    FeasibilityResult res = feasible(g, Scalar(2), SolveOptions{});
    std::string json = feasibility_report_json(g, Scalar(2), res, SolveMode::Certified);
    for (const char* key : {"\"graph\"", "\"R\"", "\"status\"", "\"mode\"", "\"certificate\"",
                            "\"cases_solved\"", "\"cases_pruned\"", "\"wall_ms\"", "\"sign_case\"",
                            "\"margin\""})
        CHECK(json.find(key) != std::string::npos);
    CHECK(json.find("\"feasible\"") != std::string::npos);
}
