#ifndef BANDGRAPH_GEOMETRY_HPP
#define BANDGRAPH_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bandgraph/graph.hpp"
#include "bandgraph/scalar.hpp"

namespace bandgraph {

/// Non-vertical real line y = a*x + c.
struct Line {
    Scalar a;  // slope
    Scalar c;  // intercept

    friend bool operator==(const Line& l, const Line& m) {
        return l.a == m.a && l.c == m.c;
    }
};

struct Point {
    Scalar x;
    Scalar y;
};

enum class RegionKind { Band, Ball };

/// Closed band { |x| <= r } or closed ball { x^2 + y^2 <= r^2 }.
struct Region {
    RegionKind kind;
    Scalar r;

    static Region band(Scalar r) { return {RegionKind::Band, std::move(r)}; }
    static Region ball(Scalar r) { return {RegionKind::Ball, std::move(r)}; }
};

/// An ordered set of pairwise distinct lines; index i corresponds to graph
/// vertex i+1. All coefficients live in one quadratic extension Q(sqrt(d)).
class Configuration {
public:
    explicit Configuration(std::vector<Line> lines);

    const std::vector<Line>& lines() const { return lines_; }
    const Line& line(int vertex) const { return lines_.at(vertex - 1); }
    int size() const { return int(lines_.size()); }
    long ext() const { return d_; }

    std::string to_json() const;
    static Configuration from_json(const std::string& text);

private:
    std::vector<Line> lines_;
    long d_;
};

/// Abscissa of l1 ∩ l2, x = -(c1-c2)/(a1-a2); nullopt when parallel.
/// Identical lines are rejected.
std::optional<Scalar> intersection_abscissa(const Line& l1, const Line& l2);

/// Full intersection point; nullopt when parallel.
std::optional<Point> intersection_point(const Line& l1, const Line& l2);

bool in_region(const Point& p, const Region& reg);

/// One vertex per line, an edge iff the two lines meet inside the region.
Graph intersection_graph(const Configuration& cfg, const Region& reg);

struct Violation {
    int i;
    int j;
    std::string reason;
};

struct VerifyResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks that cfg realizes g: every edge pair meets inside the closed
/// region of radius r_in, every non-edge pair is parallel or meets strictly
/// outside the closed region of radius r_out.
VerifyResult verify_realization(const Configuration& cfg, const Graph& g, const Scalar& r_in,
                                const Scalar& r_out, RegionKind kind);

struct AchievedRadii {
    std::optional<Scalar> edge_max;     // nullopt when g has no edges
    std::optional<Scalar> nonedge_min;  // nullopt means +infinity
};

/// Band semantics: max |x_ij| over edges and min |x_ij| over non-edges
/// (parallel non-edges are treated as infinitely far). Requires that cfg
/// realizes g at inner radius 1.
AchievedRadii achieved_radii(const Configuration& cfg, const Graph& g);

/// (x,y) -> (x, lambda*y) followed by a homothety of ratio 1-eps: turns a
/// band-feasible configuration for (1, R) into a ball-feasible one for
/// (1, R*(1-eps)). lambda is found by halving from 1 until the result
/// verifies; the output is re-verified before being returned.
Configuration flatten_to_ball(const Configuration& cfg, const Graph& g, const Scalar& R,
                              const Scalar& eps);

}  // namespace bandgraph

#endif
