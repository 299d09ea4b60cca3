#include "bandgraph/geometry.hpp"

#include <json.hpp>

namespace bandgraph {

Configuration::Configuration(std::vector<Line> lines) : lines_(std::move(lines)), d_(0) {
    if (lines_.empty()) throw std::invalid_argument("configuration: no lines");
    auto absorb = [this](long d) {
        if (d == 0) return;
        if (d_ == 0)
            d_ = d;
        else if (d_ != d)
            throw std::invalid_argument("configuration: mixed extensions");
    };
    for (const Line& l : lines_) {
        absorb(l.a.ext());
        absorb(l.c.ext());
    }
    for (size_t i = 0; i < lines_.size(); ++i)
        for (size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw std::invalid_argument("configuration: duplicate lines " +
                                            std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1));
}

std::string Configuration::to_json() const {
    nlohmann::json doc;
    doc["d"] = d_;
    doc["lines"] = nlohmann::json::array();
    for (const Line& l : lines_)
        doc["lines"].push_back({{"a", l.a.str()}, {"c", l.c.str()}});
    return doc.dump(2) + "\n";
}

Configuration Configuration::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    long d = doc.at("d").get<long>();
    std::vector<Line> lines;
    for (const auto& item : doc.at("lines"))
        lines.push_back({Scalar::parse(item.at("a").get<std::string>(), d),
                         Scalar::parse(item.at("c").get<std::string>(), d)});
    return Configuration(std::move(lines));
}

std::optional<Scalar> intersection_abscissa(const Line& l1, const Line& l2) {
    if (l1 == l2) throw std::invalid_argument("intersection: identical lines");
    Scalar da = l1.a - l2.a;
    if (da.is_zero()) return std::nullopt;
    return -(l1.c - l2.c) / da;
}

std::optional<Point> intersection_point(const Line& l1, const Line& l2) {
    auto x = intersection_abscissa(l1, l2);
    if (!x) return std::nullopt;
    return Point{*x, l1.a * *x + l1.c};
}

bool in_region(const Point& p, const Region& reg) {
    if (reg.r.sign() <= 0) throw std::invalid_argument("region: radius must be positive");
    if (reg.kind == RegionKind::Band) return p.x.abs() <= reg.r;
    return p.x * p.x + p.y * p.y <= reg.r * reg.r;
}

Graph intersection_graph(const Configuration& cfg, const Region& reg) {
    Graph g(cfg.size());
    for (int i = 1; i <= cfg.size(); ++i)
        for (int j = i + 1; j <= cfg.size(); ++j) {
            auto p = intersection_point(cfg.line(i), cfg.line(j));
            if (p && in_region(*p, reg)) g.add_edge(i, j);
        }
    return g;
}

VerifyResult verify_realization(const Configuration& cfg, const Graph& g, const Scalar& r_in,
                                const Scalar& r_out, RegionKind kind) {
    if (cfg.size() != g.vertex_count())
        throw std::invalid_argument("verify: configuration has " + std::to_string(cfg.size()) +
                                    " lines but graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
    if (r_in < Scalar(1) || r_out < r_in)
        throw std::invalid_argument("verify: need 1 <= r_in <= r_out");

    Region inner{kind, r_in}, outer{kind, r_out};
    VerifyResult res;
    for (auto [i, j] : g.pairs()) {
        auto p = intersection_point(cfg.line(i), cfg.line(j));
        if (g.has_edge(i, j)) {
            if (!p)
                res.violations.push_back({i, j, "edge pair is parallel"});
            else if (!in_region(*p, inner))
                res.violations.push_back({i, j, "edge intersection outside inner region"});
        } else {
            // parallel non-edges never meet, which is fine; otherwise the
            // point must be strictly outside the closed outer region
            if (p && in_region(*p, outer))
                res.violations.push_back({i, j, "non-edge intersection not strictly outside outer region"});
        }
    }
    return res;
}

AchievedRadii achieved_radii(const Configuration& cfg, const Graph& g) {
    Scalar one(1);
    VerifyResult base = verify_realization(cfg, g, one, one, RegionKind::Band);
    if (!base.ok()) {
        std::string what = "achieved_radii: configuration does not realize the graph at radius 1:";
        for (const auto& v : base.violations)
            what += " (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") " + v.reason + ";";
        throw std::domain_error(what);
    }
    AchievedRadii out;
    for (auto [i, j] : g.pairs()) {
        auto x = intersection_abscissa(cfg.line(i), cfg.line(j));
        if (g.has_edge(i, j)) {
            Scalar v = x->abs();  // edges intersect; verified above
            if (!out.edge_max || v > *out.edge_max) out.edge_max = v;
        } else if (x) {
            Scalar v = x->abs();
            if (!out.nonedge_min || v < *out.nonedge_min) out.nonedge_min = v;
        }
    }
    return out;
}

Configuration flatten_to_ball(const Configuration& cfg, const Graph& g, const Scalar& R,
                              const Scalar& eps) {
    if (eps.sign() <= 0 || eps >= Scalar(1))
        throw std::invalid_argument("flatten: need 0 < eps < 1");
    if (!verify_realization(cfg, g, Scalar(1), R, RegionKind::Band).ok())
        throw std::domain_error("flatten: input does not band-realize the graph at (1, R)");

    Scalar shrink = Scalar(1) - eps;
    Scalar r_out = R * shrink;
    if (r_out < Scalar(1))
        throw std::invalid_argument("flatten: R*(1-eps) < 1 leaves no room for the inner ball");
    Scalar lambda(1);
    for (int iter = 0; iter < 256; ++iter) {
        std::vector<Line> flat;
        flat.reserve(cfg.lines().size());
        for (const Line& l : cfg.lines()) flat.push_back({lambda * l.a, shrink * lambda * l.c});
        Configuration candidate(std::move(flat));
        if (verify_realization(candidate, g, Scalar(1), r_out, RegionKind::Ball).ok())
            return candidate;
        lambda = lambda / Scalar(2);
    }
    throw std::runtime_error("flatten: no admissible lambda found after 256 halvings");
}

}  // namespace bandgraph
