#include "bandgraph/feasibility.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "bandgraph/lp_check.hpp"

namespace bandgraph {

namespace {

constexpr double kScreenThreshold = 1e-7;  // float margins below this look prunable

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Candidate {
    uint64_t index;
    LpOutcome outcome;
    SignCase sc;
};

struct UnitResult {
    SolveStats stats;
    std::optional<Candidate> candidate;

    void offer(Candidate cand) {
        if (!candidate || cand.index < candidate->index) candidate = std::move(cand);
    }
};

class CaseSearch {
public:
    CaseSearch(const Graph& g, const Scalar& R, const SolveOptions& opts)
        : g_(g), R_(R), opts_(opts), m_(g.pair_count()) {}

    FeasibilityResult run() {
        // Phase A: serial expansion down to the unit depth, pruning on the way
        size_t unit_depth = m_ <= 3 ? m_ : 3;
        UnitResult serial;
        SignCase sc = SignCase::from_index(g_.vertex_count(), 0);
        expand(1, 0, unit_depth, sc, serial);

        // Phase B: surviving subtrees across the worker pool
        std::vector<UnitResult> results(units_.size());
        unsigned jobs = opts_.jobs ? opts_.jobs : std::max(1u, std::thread::hardware_concurrency());
        jobs = unsigned(std::min<size_t>(jobs, std::max<size_t>(units_.size(), 1)));
        if (jobs <= 1 || units_.size() <= 1) {
            for (size_t u = 0; u < units_.size(); ++u) run_unit(u, unit_depth, results[u]);
        } else {
            std::atomic<size_t> next{0};
            auto work = [&] {
                for (;;) {
                    size_t u = next.fetch_add(1);
                    if (u >= units_.size()) return;
                    run_unit(u, unit_depth, results[u]);
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }

        // deterministic merge in unit order
        UnitResult merged = std::move(serial);
        for (UnitResult& r : results) {
            merged.stats.absorb(r.stats);
            if (r.candidate) merged.offer(std::move(*r.candidate));
        }

        FeasibilityResult out;
        out.stats = merged.stats;
        if (merged.candidate) {
            out.feasible = true;
            out.witness = build_certificate(std::move(*merged.candidate));
        } else {
            out.feasible = false;
            out.stats.advisory = opts_.mode == SolveMode::Fast;
            // exhaustive accounting must cover every case exactly once
            if (out.stats.cases_solved + out.stats.cases_pruned !=
                SignCase::case_count(g_.vertex_count()))
                throw std::logic_error("feasibility: case accounting mismatch");
        }
        return out;
    }

private:
    uint64_t weight(size_t pos) const { return uint64_t(1) << (2 * (m_ - 1 - pos)); }
    uint64_t subtree_cases(size_t depth) const { return uint64_t(1) << (2 * (m_ - depth)); }

    bool cancelled(uint64_t base) const {
        return base > best_found_.load(std::memory_order_relaxed);
    }

    void set_pair(SignCase& sc, size_t pos, unsigned digit) const {
        sc.sigma[pos] = (digit & 2u) ? -1 : 1;
        sc.tau[pos] = (digit & 1u) ? -1 : 1;
    }

    // attempts to dispose of the whole subtree below the assigned prefix
    bool try_prune(size_t depth, const SignCase& sc, UnitResult& out) {
        LinearProgram lp = build_margin_lp_prefix(g_, R_, sc, opts_.box, depth);
        FloatOutcome fl = simplex_solve_float(lp);
        ++out.stats.float_screens;
        if (fl.feasible && fl.objective >= kScreenThreshold) return false;  // looks alive
        if (opts_.mode == SolveMode::Fast) {
            out.stats.cases_pruned += subtree_cases(depth);
            return true;  // advisory prune
        }
        LpOutcome exact = simplex_solve(lp);
        ++out.stats.prefix_lps;
        note_check(lp, exact, out.stats);
        if (exact.status == LpStatus::Optimal && exact.objective.sign() > 0)
            return false;  // the screen lied; descend
        out.stats.cases_pruned += subtree_cases(depth);
        return true;
    }

    void leaf(uint64_t index, const SignCase& sc, UnitResult& out) {
        LinearProgram lp = build_margin_lp(g_, R_, sc, opts_.box);
        ++out.stats.cases_solved;
        if (opts_.mode == SolveMode::Fast) {
            FloatOutcome fl = simplex_solve_float(lp);
            ++out.stats.float_screens;
            if (!fl.feasible || fl.objective < kScreenThreshold) return;  // screened out
        }
        LpOutcome exact = simplex_solve(lp);
        note_check(lp, exact, out.stats);
        if (exact.status == LpStatus::Optimal && exact.objective.sign() > 0) {
            uint64_t prev = best_found_.load(std::memory_order_relaxed);
            while (index < prev &&
                   !best_found_.compare_exchange_weak(prev, index, std::memory_order_relaxed)) {
            }
            out.offer({index, std::move(exact), sc});
        }
    }

    void dfs(size_t depth, uint64_t base, SignCase& sc, UnitResult& out) {
        if (cancelled(base)) return;
        if (depth == m_) {
            leaf(base, sc, out);
            return;
        }
        if (try_prune(depth, sc, out)) return;
        for (unsigned d = 0; d < 4; ++d) {
            set_pair(sc, depth, d);
            dfs(depth + 1, base + d * weight(depth), sc, out);
        }
        set_pair(sc, depth, 0);
    }

    void expand(size_t depth, uint64_t base, size_t unit_depth, SignCase& sc, UnitResult& out) {
        if (depth == m_) {
            leaf(base, sc, out);
            return;
        }
        if (depth == unit_depth) {
            units_.push_back(base);
            return;
        }
        if (try_prune(depth, sc, out)) return;
        for (unsigned d = 0; d < 4; ++d) {
            set_pair(sc, depth, d);
            expand(depth + 1, base + d * weight(depth), unit_depth, sc, out);
        }
        set_pair(sc, depth, 0);
    }

    void run_unit(size_t u, size_t unit_depth, UnitResult& out) {
        uint64_t base = units_[u];
        SignCase sc = SignCase::from_index(g_.vertex_count(), base);
        dfs(unit_depth, base, sc, out);
    }

    void note_check(const LinearProgram& lp, const LpOutcome& exact, SolveStats& stats) {
        if (!opts_.verify_certificates) return;
        ++stats.certificates_checked;
        if (!check_certificates(lp, exact).ok) ++stats.certificate_failures;
    }

    Certificate build_certificate(Candidate cand) {
        std::vector<Line> lines;
        for (int i = 1; i <= g_.vertex_count(); ++i)
            lines.push_back(
                {cand.outcome.primal[2 * (i - 1)], cand.outcome.primal[2 * (i - 1) + 1]});
        Configuration cfg(std::move(lines));
        if (!verify_realization(cfg, g_, Scalar(1), R_, RegionKind::Band).ok())
            throw std::logic_error("feasibility: witness failed geometric re-verification");
        AchievedRadii achieved = achieved_radii(cfg, g_);
        if (achieved.nonedge_min && !(*achieved.nonedge_min > R_))
            throw std::logic_error("feasibility: witness non-edge separation does not clear R");
        return Certificate{std::move(cfg), std::move(cand.sc), cand.outcome.objective,
                           std::move(achieved), cand.index};
    }

    const Graph& g_;
    const Scalar& R_;
    const SolveOptions& opts_;
    size_t m_;
    std::vector<uint64_t> units_;
    std::atomic<uint64_t> best_found_{UINT64_MAX};
};

Certificate trivial_certificate(const Graph& g, const Scalar& box) {
    Configuration cfg(std::vector<Line>{{Scalar(0), Scalar(0)}});
    AchievedRadii achieved = achieved_radii(cfg, g);
    return Certificate{std::move(cfg), SignCase{}, box, std::move(achieved), 0};
}

}  // namespace

void SolveStats::absorb(const SolveStats& s) {
    cases_solved += s.cases_solved;
    cases_pruned += s.cases_pruned;
    prefix_lps += s.prefix_lps;
    float_screens += s.float_screens;
    certificates_checked += s.certificates_checked;
    certificate_failures += s.certificate_failures;
    advisory = advisory || s.advisory;
    wall_ms += s.wall_ms;
}

FeasibilityResult feasible(const Graph& g, const Scalar& R, const SolveOptions& opts) {
    auto t0 = Clock::now();
    if (R < Scalar(1)) throw std::invalid_argument("feasible: R must be >= 1");
    FeasibilityResult out;
    if (g.vertex_count() == 1) {  // no pairs, vacuously realizable
        out.feasible = true;
        out.witness = trivial_certificate(g, opts.box);
        out.stats.wall_ms = ms_since(t0);
        return out;
    }
    if (g.vertex_count() > 5)
        throw ResourceCapError(
            "feasible: " + std::to_string(g.vertex_count()) +
            " lines need 4^(n(n-1)/2-1) sign cases, beyond the resource cap; "
            "this solver is sized for at most 4 or 5 lines");
    out = CaseSearch(g, R, opts).run();
    out.stats.wall_ms = ms_since(t0);
    return out;
}

RmaxResult rmax(const Graph& g, double tol, double rcap, const SolveOptions& opts) {
    if (!(tol > 0)) throw std::invalid_argument("rmax: tol must be positive");
    if (!(rcap >= 1)) throw std::invalid_argument("rmax: rcap must be >= 1");

    RmaxResult out;
    auto probe = [&](double r) {
        FeasibilityResult res = feasible(g, Scalar(mpq_class(r)), opts);  // dyadic, exact
        out.stats.absorb(res.stats);
        ++out.probes;
        return res;
    };

    FeasibilityResult at_one = probe(1.0);
    if (!at_one.feasible) {
        out.status = RmaxResult::Status::NotRealizable;
        out.lo = out.hi = 1.0;
        return out;
    }
    FeasibilityResult at_cap = probe(rcap);
    if (at_cap.feasible) {
        out.status = RmaxResult::Status::ExceedsCap;
        out.lo = rcap;
        out.hi = std::numeric_limits<double>::infinity();
        out.witness = std::move(at_cap.witness);
        return out;
    }

    double lo = 1.0, hi = rcap;
    out.witness = std::move(at_one.witness);
    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // float resolution exhausted
        FeasibilityResult res = probe(mid);
        if (res.feasible) {
            lo = mid;
            out.witness = std::move(res.witness);
        } else {
            hi = mid;
        }
    }
    out.status = RmaxResult::Status::Bracketed;
    out.lo = lo;
    out.hi = hi;
    return out;
}

FeasibilityResult check_exact_boundary(const Graph& g, const Scalar& R, BoundarySide side,
                                       const Scalar& gap, const SolveOptions& opts) {
    SolveOptions certified = opts;
    certified.mode = SolveMode::Certified;
    if (side == BoundarySide::Below) {
        if (gap.sign() <= 0)
            throw std::invalid_argument("check_exact_boundary: below needs a positive gap");
        return feasible(g, R - gap, certified);
    }
    return feasible(g, R, certified);
}

namespace {

struct QInterval {
    mpq_class lo, hi;
};

QInterval iv_mul(const QInterval& x, const QInterval& y) {
    mpq_class p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

QInterval iv_poly(const std::vector<mpq_class>& coeffs, const QInterval& x) {
    QInterval acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = iv_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::pair<mpq_class, mpq_class> refine_root_interval_newton(const std::vector<long>& int_coeffs,
                                                            mpq_class lo, mpq_class hi,
                                                            const mpq_class& tol) {
    if (int_coeffs.size() < 2) throw std::invalid_argument("refine_root: need degree >= 1");
    std::vector<mpq_class> f(int_coeffs.begin(), int_coeffs.end());
    std::vector<mpq_class> df;
    for (size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * long(k));

    mpq_class flo = eval_poly(f, lo), fhi = eval_poly(f, hi);
    if (flo == 0) return {lo, lo};
    if (fhi == 0) return {hi, hi};
    if (sgn(flo) == sgn(fhi))
        throw std::invalid_argument("refine_root: no sign change on the bracket");
    int sign_lo = sgn(flo);

    for (int iter = 0; iter < 10000; ++iter) {
        if (hi - lo <= tol) return {lo, hi};
        mpq_class mid = (lo + hi) / 2;
        mpq_class fm = eval_poly(f, mid);
        if (fm == 0) return {mid, mid};

        bool stepped = false;
        QInterval d = iv_poly(df, {lo, hi});
        if (sgn(d.lo) == sgn(d.hi) && sgn(d.lo) != 0) {
            // Newton: mid - f(mid)/f'(X), intersected with the bracket
            mpq_class n1 = mid - fm / d.lo, n2 = mid - fm / d.hi;
            mpq_class nlo = std::min(n1, n2), nhi = std::max(n1, n2);
            mpq_class xlo = std::max(lo, nlo), xhi = std::min(hi, nhi);
            if (xlo <= xhi && (xhi - xlo) * 4 <= (hi - lo) * 3) {
                // only accept steps that keep the sign-change bracket
                if (sgn(eval_poly(f, xlo)) == sign_lo && sgn(eval_poly(f, xhi)) == -sign_lo) {
                    lo = xlo;
                    hi = xhi;
                    stepped = true;
                }
            }
        }
        if (!stepped) {  // bisection fallback
            if (sgn(fm) == sign_lo)
                lo = mid;
            else
                hi = mid;
        }
    }
    throw std::runtime_error("refine_root: failed to converge");
}

std::string feasibility_report_json(const Graph& g, const Scalar& R,
                                    const FeasibilityResult& res, SolveMode mode) {
    nlohmann::json doc;
    doc["graph"] = g.serialize();
    doc["R"] = R.str();
    doc["d"] = R.ext();
    doc["status"] = res.feasible ? "feasible" : "infeasible";
    doc["mode"] = mode == SolveMode::Certified ? "certified" : "fast";
    doc["advisory"] = res.stats.advisory;
    if (res.witness) {
        const Certificate& c = *res.witness;
        nlohmann::json cert;
        cert["config"] = nlohmann::json::parse(c.config.to_json());
        cert["sign_case"] = c.sign_case.str();
        cert["margin"] = c.margin.str();
        cert["case_index"] = c.case_index;
        cert["edge_max"] = c.achieved.edge_max ? c.achieved.edge_max->str() : "none";
        cert["nonedge_min"] = c.achieved.nonedge_min ? c.achieved.nonedge_min->str() : "infinity";
        doc["certificate"] = cert;
    } else {
        doc["certificate"] = nullptr;
    }
    doc["cases_solved"] = res.stats.cases_solved;
    doc["cases_pruned"] = res.stats.cases_pruned;
    doc["prefix_lps"] = res.stats.prefix_lps;
    doc["float_screens"] = res.stats.float_screens;
    doc["certificates_checked"] = res.stats.certificates_checked;
    doc["certificate_failures"] = res.stats.certificate_failures;
    doc["wall_ms"] = res.stats.wall_ms;
    return doc.dump(2) + "\n";
}

}  // namespace bandgraph
