#include "bandgraph/complex_arr.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace bandgraph {

namespace {

using cd = std::complex<double>;

ComplexLine through(const cd& x1, const cd& y1, const cd& x2, const cd& y2, std::string label) {
    cd u = y2 - y1, v = x1 - x2;
    return {u, v, u * x1 + v * y1, std::move(label)};
}

}  // namespace

ComplexArrangement build_g6() {
    std::vector<cd> px(5), py(5);
    for (int i = 0; i < 5; ++i) {
        double ang = 2.0 * M_PI * i / 5.0;
        px[i] = std::polar(1.0, ang);              // omega^i
        py[i] = std::polar(1.0, -ang);             // omega^(5-i) = conj
    }
    ComplexArrangement arr;
    for (int i = 1; i <= 5; ++i) {
        int a = (i - 1 + 4) % 5, b = (i + 1 - 1) % 5;  // P_(i-1), P_(i+1), 0-indexed
        arr.lines.push_back(through(px[a], py[a], px[b], py[b], "l" + std::to_string(i)));
    }
    arr.lines.push_back({cd(6, 0), cd(-4, 0), cd(1, 0), "L"});
    return arr;
}

std::vector<ComplexIntersection> complex_intersections(const ComplexArrangement& arr) {
    std::vector<ComplexIntersection> out;
    for (int i = 0; i < arr.size(); ++i)
        for (int j = i + 1; j < arr.size(); ++j) {
            const ComplexLine& a = arr.lines[i];
            const ComplexLine& b = arr.lines[j];
            cd det = a.u * b.v - a.v * b.u;
            double scale = std::max(std::abs(a.u) * std::abs(b.v), std::abs(a.v) * std::abs(b.u));
            if (std::abs(det) <= 1e-12 * std::max(scale, 1.0))
                throw std::runtime_error("complex arrangement: near-parallel pair " +
                                         arr.lines[i].label + ", " + arr.lines[j].label);
            cd x = (a.w * b.v - a.v * b.w) / det;
            cd y = (a.u * b.w - a.w * b.u) / det;
            double norm = std::sqrt(std::norm(x) + std::norm(y));
            out.push_back({i + 1, j + 1, x, y, norm});
        }
    return out;
}

Graph complex_ball_graph(const ComplexArrangement& arr, double r,
                         std::vector<std::string>* warnings) {
    if (!(r > 0)) throw std::invalid_argument("complex ball: radius must be positive");
    Graph g(arr.size());
    for (const ComplexIntersection& p : complex_intersections(arr)) {
        if (warnings && std::fabs(p.norm - r) <= 1e-6)
            warnings->push_back("boundary ambiguity: intersection " + std::to_string(p.i) + "-" +
                                std::to_string(p.j) + " at norm " + std::to_string(p.norm) +
                                " vs radius " + std::to_string(r));
        if (p.norm * p.norm <= r * r + 1e-9) g.add_edge(p.i, p.j);
    }
    return g;
}

std::optional<std::pair<double, double>> separating_radii(const ComplexArrangement& arr,
                                                          const Graph& target) {
    if (target.vertex_count() != arr.size())
        throw std::invalid_argument("separating_radii: size mismatch");
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    auto points = complex_intersections(arr);
    std::set<std::pair<int, int>> seen;
    for (const ComplexIntersection& p : points) {
        seen.insert({p.i, p.j});
        if (target.has_edge(p.i, p.j))
            lo = std::max(lo, p.norm);
        else
            hi = std::min(hi, p.norm);
    }
    for (auto [i, j] : target.edges())
        if (!seen.count({i, j})) return std::nullopt;  // edge pair never meets
    if (!(lo < hi)) return std::nullopt;
    return std::make_pair(lo, hi);
}

namespace {

// Edge parameters t_i of the transversal against each edge line; rejects
// degenerate instances naming the offending edge (1-based).
std::vector<mpq_class> edge_parameters(const PolygonInstance& inst) {
    size_t k = inst.vertices.size();
    if (k < 3) throw std::invalid_argument("polygon: need at least 3 vertices");
    if (inst.u == 0 && inst.v == 0) throw std::invalid_argument("polygon: null transversal");
    std::vector<mpq_class> ts;
    for (size_t i = 0; i < k; ++i) {
        const auto& [x1, y1] = inst.vertices[i];
        const auto& [x2, y2] = inst.vertices[(i + 1) % k];
        mpq_class dx = x2 - x1, dy = y2 - y1;
        if (dx == 0 && dy == 0)
            throw std::invalid_argument("polygon: degenerate edge " + std::to_string(i + 1));
        mpq_class denom = inst.u * dx + inst.v * dy;
        if (denom == 0)
            throw std::invalid_argument("polygon: transversal parallel to edge " +
                                        std::to_string(i + 1));
        mpq_class t = (inst.w - inst.u * x1 - inst.v * y1) / denom;
        if (t == 0 || t == 1)
            throw std::invalid_argument("polygon: transversal passes through a vertex of edge " +
                                        std::to_string(i + 1));
        ts.push_back(std::move(t));
    }
    return ts;
}

}  // namespace

Scalar menelaus_product(const PolygonInstance& inst) {
    mpq_class prod(1);
    for (const mpq_class& t : edge_parameters(inst)) prod *= t / (t - 1);
    return Scalar(std::move(prod));
}

CrossingParity crossing_parity(const PolygonInstance& inst) {
    CrossingParity out;
    for (const mpq_class& t : edge_parameters(inst))
        if (t > 0 && t < 1) ++out.count;
    out.even = out.count % 2 == 0;
    return out;
}

std::string complex_g6_report_json() {
    ComplexArrangement arr = build_g6();
    auto points = complex_intersections(arr);

    nlohmann::json doc;
    doc["arrangement"] = nlohmann::json::array();
    for (const ComplexLine& l : arr.lines)
        doc["arrangement"].push_back({{"label", l.label},
                                      {"u", {l.u.real(), l.u.imag()}},
                                      {"v", {l.v.real(), l.v.imag()}},
                                      {"w", {l.w.real(), l.w.imag()}}});

    doc["intersections"] = nlohmann::json::array();
    std::vector<double> norms;
    for (const ComplexIntersection& p : points) {
        doc["intersections"].push_back({{"pair", std::to_string(p.i) + "-" + std::to_string(p.j)},
                                        {"x", {p.x.real(), p.x.imag()}},
                                        {"y", {p.y.real(), p.y.imag()}},
                                        {"norm", p.norm}});
        norms.push_back(p.norm);
    }
    std::sort(norms.begin(), norms.end());
    doc["norms_sorted"] = norms;

    Graph g6 = Graph::catalog("G6");
    auto interval = separating_radii(arr, g6);
    if (interval) {
        doc["separating_interval"] = {interval->first, interval->second};
        double r = (interval->first + interval->second) / 2;
        doc["graph_at_midpoint"] = complex_ball_graph(arr, r).serialize();
        doc["matches_g6"] = complex_ball_graph(arr, r) == g6;
    } else {
        doc["separating_interval"] = nullptr;
        doc["matches_g6"] = false;
    }
    return doc.dump(2) + "\n";
}

}  // namespace bandgraph
