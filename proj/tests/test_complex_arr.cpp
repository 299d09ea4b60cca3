#include <doctest.h>

#include <cmath>
#include <random>

#include "bandgraph/complex_arr.hpp"

using namespace bandgraph;

namespace {

mpq_class frac(long p, long q = 1) {
    mpq_class v(p, q);
    v.canonicalize();
    return v;
}

// rejection-sampled random pentagon + transversal in general position
PolygonInstance random_instance(std::mt19937& rng, int k = 5) {
    std::uniform_int_distribution<long> coord(-40, 40), den(1, 8);
    for (;;) {
        PolygonInstance inst;
        for (int i = 0; i < k; ++i)
            inst.vertices.push_back({frac(coord(rng), den(rng)), frac(coord(rng), den(rng))});
        inst.u = frac(coord(rng), den(rng));
        inst.v = frac(coord(rng), den(rng));
        inst.w = frac(coord(rng), den(rng));
        if (inst.u == 0 && inst.v == 0) continue;
        try {
            menelaus_product(inst);
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw, resample
        }
        return inst;
    }
}

}  // namespace

TEST_CASE("build_g6 geometry") {
    ComplexArrangement arr = build_g6();
    REQUIRE(arr.size() == 6);

    // the P_i all sit at squared norm 2 (unit-modulus coordinates)
    for (int i = 0; i < 5; ++i) {
        std::complex<double> x = std::polar(1.0, 2 * M_PI * i / 5);
        std::complex<double> y = std::conj(x);
        CHECK(std::norm(x) + std::norm(y) == doctest::Approx(2.0).epsilon(1e-14));
        // line l_(i+1) = (P_(i-1) P_(i+1)) skips P_i; the two adjacent chords contain it
        for (int off : {1, 4}) {  // lines indexed i+1 +- 1 mod 5 contain P_i
            const ComplexLine& l = arr.lines[(i + off) % 5];
            std::complex<double> residual = l.u * x + l.v * y - l.w;
            CHECK(std::abs(residual) < 1e-12);
        }
    }

    auto points = complex_intersections(arr);
    CHECK(points.size() == 15);  // no parallel pairs
}

TEST_CASE("complex ball graphs across radii") {
    ComplexArrangement arr = build_g6();

    CHECK(complex_ball_graph(arr, 1e-9).edge_count() == 0);
    CHECK(complex_ball_graph(arr, 100).edge_count() == 15);  // K6

    // between the largest inner norm and sqrt(2) the graph is exactly G6
    CHECK(complex_ball_graph(arr, 1.35) == Graph::catalog("G6"));

    // edge sets grow with the radius
    size_t prev = 0;
    for (double r : {0.3, 0.5, 0.7, 1.0, 1.3, 1.42, 2.0}) {
        size_t cur = complex_ball_graph(arr, r).edge_count();
        CHECK(cur >= prev);
        prev = cur;
    }

    std::vector<std::string> warnings;
    complex_ball_graph(arr, std::sqrt(2.0), &warnings);
    CHECK(!warnings.empty());  // the P_i sit on that boundary
}

TEST_CASE("separating radii") {
    ComplexArrangement arr = build_g6();

    auto g6 = separating_radii(arr, Graph::catalog("G6"));
    REQUIRE(g6);
    CHECK(g6->first < g6->second);
    CHECK(g6->second <= std::sqrt(2.0) + 1e-9);
    CHECK(g6->second == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    Graph k6(6);
    for (auto [i, j] : k6.pairs()) k6.add_edge(i, j);
    auto full = separating_radii(arr, k6);
    REQUIRE(full);
    CHECK(full->first == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::isinf(full->second));

    auto empty = separating_radii(arr, Graph(6));
    REQUIRE(empty);
    CHECK(empty->first == 0.0);
    CHECK(empty->second == doctest::Approx(0.4403418).epsilon(1e-5));

    // a graph no radius realizes: the 5-cycle without the hub edges
    Graph rim(6);
    for (auto [i, j] : Graph::catalog("C5").edges()) rim.add_edge(i, j);
    CHECK(!separating_radii(arr, rim));
}

TEST_CASE("menelaus product is exactly 1") {
    // classical triangle case
    PolygonInstance tri;
    tri.vertices = {{frac(0), frac(0)}, {frac(4), frac(0)}, {frac(1), frac(3)}};
    tri.u = frac(0);
    tri.v = frac(1);
    tri.w = frac(1);  // horizontal line y = 1
    CHECK(menelaus_product(tri) == Scalar(1));

    // square with a slightly tilted line through two opposite edges
    PolygonInstance sq;
    sq.vertices = {{frac(0), frac(0)}, {frac(2), frac(0)}, {frac(2), frac(2)}, {frac(0), frac(2)}};
    sq.u = frac(1, 7);
    sq.v = frac(1);
    sq.w = frac(1);
    CHECK(menelaus_product(sq) == Scalar(1));

    std::mt19937 rng(424242);
    for (int t = 0; t < 2000; ++t) {
        PolygonInstance inst = random_instance(rng);
        CHECK(menelaus_product(inst) == Scalar(1));
        CHECK(crossing_parity(inst).even);
    }
}

TEST_CASE("crossing counts on explicit instances") {
    PolygonInstance pent;  // convex pentagon around the origin
    pent.vertices = {{frac(2), frac(0)},
                     {frac(1), frac(2)},
                     {frac(-2), frac(1)},
                     {frac(-2), frac(-1)},
                     {frac(1), frac(-2)}};

    pent.u = frac(0);
    pent.v = frac(1);
    pent.w = frac(10);  // far above: no crossings
    CHECK(crossing_parity(pent).count == 0);

    pent.w = frac(1, 3);  // through the interior: exactly two crossings
    CHECK(crossing_parity(pent).count == 2);
    CHECK(crossing_parity(pent).even);
}

TEST_CASE("degenerate polygon instances are rejected with the edge index") {
    PolygonInstance bad;
    bad.vertices = {{frac(0), frac(0)}, {frac(1), frac(0)}, {frac(1), frac(1)}};
    bad.u = frac(0);
    bad.v = frac(1);
    bad.w = frac(0);  // the x-axis contains edge 1 endpoints
    CHECK_THROWS_WITH_AS(menelaus_product(bad),
                         doctest::Contains("parallel to edge"), std::invalid_argument);

    bad.w = frac(1);  // passes through vertex (1,1)
    CHECK_THROWS_WITH_AS(crossing_parity(bad), doctest::Contains("vertex"),
                         std::invalid_argument);
}

TEST_CASE("complex g6 report") {
    std::string json = complex_g6_report_json();
    CHECK(json.find("\"separating_interval\"") != std::string::npos);
    CHECK(json.find("\"matches_g6\": true") != std::string::npos);
    CHECK(json.find("\"norms_sorted\"") != std::string::npos);
}
