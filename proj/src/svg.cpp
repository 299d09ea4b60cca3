#include "bandgraph/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace bandgraph {

namespace {

constexpr int kCanvas = 640;
constexpr double kHalf = kCanvas / 2.0;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
    return buf;
}

struct Mapper {
    double scale;
    double sx(double x) const { return kHalf + x * scale; }
    double sy(double y) const { return kHalf - y * scale; }
};

std::string svg_open() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kCanvas) +
           "\" height=\"" + std::to_string(kCanvas) + "\" viewBox=\"0 0 " +
           std::to_string(kCanvas) + " " + std::to_string(kCanvas) + "\">\n";
}

std::string svg_line(const Mapper& m, double x1, double y1, double x2, double y2,
                     const std::string& style) {
    return "  <line x1=\"" + fmt(m.sx(x1)) + "\" y1=\"" + fmt(m.sy(y1)) + "\" x2=\"" +
           fmt(m.sx(x2)) + "\" y2=\"" + fmt(m.sy(y2)) + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const Configuration& cfg, const Graph& g, const Scalar& r_in,
                       const Scalar& r_out, RegionKind kind) {
    if (cfg.size() != g.vertex_count())
        throw std::invalid_argument("svg: configuration/graph size mismatch");

    double rin = r_in.approx(), rout = r_out.approx();
    struct Marker {
        double x, y;
        bool edge;
    };
    std::vector<Marker> markers;
    double extent = std::max(rout, 1.0);
    for (auto [i, j] : g.pairs()) {
        auto p = intersection_point(cfg.line(i), cfg.line(j));
        if (!p) continue;
        double x = p->x.approx(), y = p->y.approx();
        markers.push_back({x, y, g.has_edge(i, j)});
        extent = std::max({extent, std::fabs(x), std::fabs(y)});
    }
    double window = extent * 1.15;
    Mapper m{(kHalf - 20.0) / window};

    std::string out = svg_open();
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (kind == RegionKind::Band) {
        for (double r : {rin, -rin})
            out += svg_line(m, r, -window, r, window, "stroke=\"gray\" stroke-width=\"1\"");
        for (double r : {rout, -rout})
            out += svg_line(m, r, -window, r, window,
                            "stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"");
    } else {
        for (double r : {rin, rout})
            out += "  <circle cx=\"" + fmt(kHalf) + "\" cy=\"" + fmt(kHalf) + "\" r=\"" +
                   fmt(r * m.scale) + "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"" +
                   (r == rout ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    }

    for (const Line& l : cfg.lines()) {
        double a = l.a.approx(), c = l.c.approx();
        out += svg_line(m, -window, a * -window + c, window, a * window + c,
                        "stroke=\"black\" stroke-width=\"2\"");
    }

    for (const Marker& mk : markers) {
        if (mk.edge) {
            out += "  <circle cx=\"" + fmt(m.sx(mk.x)) + "\" cy=\"" + fmt(m.sy(mk.y)) +
                   "\" r=\"5\" fill=\"red\" class=\"edge\"/>\n";
        } else {
            out += "  <rect x=\"" + fmt(m.sx(mk.x) - 4) + "\" y=\"" + fmt(m.sy(mk.y) - 4) +
                   "\" width=\"8\" height=\"8\" fill=\"blue\" class=\"nonedge\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_g6_schematic_svg() {
    Mapper m{(kHalf - 40.0) / 1.5};
    std::string out = svg_open();
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    double px[5], py[5];
    for (int i = 0; i < 5; ++i) {
        px[i] = std::cos(2 * M_PI * i / 5);
        py[i] = std::sin(2 * M_PI * i / 5);
    }
    // pentagram chords P_(i-1) -> P_(i+1)
    for (int i = 0; i < 5; ++i)
        out += svg_line(m, px[(i + 4) % 5], py[(i + 4) % 5], px[(i + 1) % 5], py[(i + 1) % 5],
                        "stroke=\"black\" stroke-width=\"2\"");
    for (int i = 0; i < 5; ++i)
        out += "  <circle cx=\"" + fmt(m.sx(px[i])) + "\" cy=\"" + fmt(m.sy(py[i])) +
               "\" r=\"4\" fill=\"black\"/>\n";
    // the bounding sphere of the schematic
    out += "  <circle cx=\"" + fmt(kHalf) + "\" cy=\"" + fmt(kHalf) + "\" r=\"" +
           fmt(0.7 * m.scale) + "\" fill=\"none\" stroke=\"gray\"/>\n";
    out += "</svg>\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace bandgraph
