#ifndef BANDGRAPH_COMPLEX_ARR_HPP
#define BANDGRAPH_COMPLEX_ARR_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bandgraph/graph.hpp"
#include "bandgraph/scalar.hpp"

namespace bandgraph {

/// Complex line u*x + v*y = w in C^2.
struct ComplexLine {
    std::complex<double> u, v, w;
    std::string label;
};

struct ComplexArrangement {
    std::vector<ComplexLine> lines;
    int size() const { return int(lines.size()); }
};

/// The six-line arrangement whose intersection graph in a 4-ball is the
/// wheel G6: five chords of the pentagon P_i = (omega^i, omega^(5-i)),
/// omega = exp(2 pi i/5), ordered so that line i joins P_(i-1) and P_(i+1),
/// plus the line 6x - 4y = 1 as vertex 6.
ComplexArrangement build_g6();

struct ComplexIntersection {
    int i, j;  // 1-based line labels
    std::complex<double> x, y;
    double norm;  // sqrt(|x|^2 + |y|^2)
};

/// All pairwise intersections; throws on near-parallel pairs (relative
/// determinant below 1e-12).
std::vector<ComplexIntersection> complex_intersections(const ComplexArrangement& arr);

/// Edge iff |x|^2 + |y|^2 <= r^2 (tolerance 1e-9 on the squared boundary).
/// Any intersection with | norm - r | <= 1e-6 appends a boundary-ambiguity
/// warning instead of deciding silently.
Graph complex_ball_graph(const ComplexArrangement& arr, double r,
                         std::vector<std::string>* warnings = nullptr);

/// The maximal interval [lo, hi) of radii on which the intersection graph
/// equals `target`: lo = largest target-edge norm, hi = smallest other norm.
/// nullopt when no radius realizes the target.
std::optional<std::pair<double, double>> separating_radii(const ComplexArrangement& arr,
                                                          const Graph& target);

/// Rational polygon P_1..P_k plus a rational transversal u*x + v*y = w in
/// general position (through no vertex, parallel to no edge line).
struct PolygonInstance {
    std::vector<std::pair<mpq_class, mpq_class>> vertices;
    mpq_class u, v, w;
};

/// Exact product of the signed ratios the transversal cuts on the edge
/// lines: prod t_i / (t_i - 1), where Q_i = P_i + t_i (P_(i+1) - P_i).
/// Always 1 for a valid instance; an individual factor is negative exactly
/// when Q_i lies inside the segment.
Scalar menelaus_product(const PolygonInstance& inst);

struct CrossingParity {
    int count = 0;  // edges crossed with t_i in (0,1)
    bool even = true;
};
CrossingParity crossing_parity(const PolygonInstance& inst);

/// JSON report: the 15 intersection points, sorted norms, the separating
/// interval against catalog G6, and the realized graph.
std::string complex_g6_report_json();

}  // namespace bandgraph

#endif
