#include "bandgraph/configs.hpp"

namespace bandgraph {

namespace {

Scalar surd(long a_num, long a_den, long b_num, long b_den, long d) {
    mpq_class a(a_num, a_den), b(b_num, b_den);
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), d);
}

Configuration a4_config() {
    // y = 0; y = (1+s/2)x - 1-s/2; y = -(s/2)x - 2-3s/2; y = x - 3-2s  (s = sqrt(2))
    std::vector<Line> lines;
    lines.push_back({Scalar(0), Scalar(0)});
    lines.push_back({surd(1, 1, 1, 2, 2), surd(-1, 1, -1, 2, 2)});
    lines.push_back({surd(0, 1, -1, 2, 2), surd(-2, 1, -3, 2, 2)});
    lines.push_back({Scalar(1), surd(-3, 1, -2, 1, 2)});
    return Configuration(std::move(lines));
}

Configuration a5_config() {
    // y = 0; y = 3+s; y = x; y = x + 2+s; y = -((s-1)/2)x + (3+s)/2  (s = sqrt(5))
    std::vector<Line> lines;
    lines.push_back({Scalar(0), Scalar(0)});
    lines.push_back({Scalar(0), surd(3, 1, 1, 1, 5)});
    lines.push_back({Scalar(1), Scalar(0)});
    lines.push_back({Scalar(1), surd(2, 1, 1, 1, 5)});
    lines.push_back({surd(1, 2, -1, 2, 5), surd(3, 2, 1, 2, 5)});
    return Configuration(std::move(lines));
}

Configuration pentagram_config() {
    // Edge lines of a rational near-regular pentagon with vertices on or just
    // inside the unit circle; line i joins vertices i-1 and i (mod 5), so
    // consecutive lines meet at pentagon vertices (the C5 edges) and the
    // remaining pairs meet at the star tips, beyond radius 5/2.
    struct Pt {
        mpq_class x, y;
    };
    auto frac = [](long p, long q) {
        mpq_class v(p, q);
        v.canonicalize();
        return v;
    };
    std::vector<Pt> v = {
        {frac(0, 1), frac(1, 1)},
        {frac(-951, 1000), frac(309, 1000)},
        {frac(-587, 1000), frac(-809, 1000)},
        {frac(587, 1000), frac(-809, 1000)},
        {frac(951, 1000), frac(309, 1000)},
    };
    std::vector<Line> lines;
    for (int i = 0; i < 5; ++i) {
        const Pt& p = v[(i + 4) % 5];
        const Pt& q = v[i];
        mpq_class slope = (q.y - p.y) / (q.x - p.x);
        mpq_class intercept = p.y - slope * p.x;
        lines.push_back({Scalar(slope), Scalar(intercept)});
    }
    return Configuration(std::move(lines));
}

}  // namespace

Configuration config_catalog(std::string_view name) {
    if (name == "a4") return a4_config();
    if (name == "a5") return a5_config();
    if (name == "pentagram") return pentagram_config();
    throw std::invalid_argument("config catalog: unknown name '" + std::string(name) + "'");
}

}  // namespace bandgraph
