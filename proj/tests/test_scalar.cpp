#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bandgraph/scalar.hpp"

using namespace bandgraph;

namespace {

Scalar q(long p, long d = 1) { return Scalar::fraction(p, d); }
Scalar surd(long an, long ad, long bn, long bd, long d) {
    mpq_class a(an, ad), b(bn, bd);
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), d);
}

// Crude outward-rounded interval arithmetic, used only as a comparison
// oracle independent of the Scalar sign machinery.
struct Iv {
    double lo, hi;
};
double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
Iv iv_sqrt(long d) { return {down(std::sqrt(double(d))), up(std::sqrt(double(d)))}; }
Iv iv_add(Iv a, Iv b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
Iv iv_scale(double k, Iv a) {  // k > 0
    return {down(k * a.lo), up(k * a.hi)};
}

// Decimal-digit enclosure of a + b*sqrt(d), independent of Scalar::to_float.
void decimal_enclosure(const Scalar& x, int digits, mpq_class& lo, mpq_class& hi) {
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
    if (x.ext() == 0) {
        lo = hi = x.rat_part();
        return;
    }
    mpz_class scaled = mpz_class(x.ext()) * pow10 * pow10;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpq_class slo(s, pow10), shi(s + 1, pow10);
    slo.canonicalize();
    shi.canonicalize();
    const mpq_class& b = x.surd_part();
    if (b > 0) {
        lo = x.rat_part() + b * slo;
        hi = x.rat_part() + b * shi;
    } else {
        lo = x.rat_part() + b * shi;
        hi = x.rat_part() + b * slo;
    }
}

double ulp_of(double v) {
    double a = std::fabs(v);
    return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

std::mt19937 rng(20240817);

Scalar random_rational() {
    std::uniform_int_distribution<long> num(-99, 99), den(1, 30);
    return Scalar::fraction(num(rng), den(rng));
}

Scalar random_sqrt2() {
    std::uniform_int_distribution<long> num(-99, 99), den(1, 30);
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    return Scalar(std::move(a), std::move(b), 2);
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
    CHECK(q(1, 2) / q(1, 4) == q(2));
    CHECK((-q(3, 7)).abs() == q(3, 7));
    CHECK_THROWS(q(1) / q(0));
}

TEST_CASE("quadratic extension arithmetic") {
    Scalar x = surd(3, 1, 2, 1, 2);   // 3 + 2*sqrt(2)
    Scalar y = surd(3, 1, -2, 1, 2);  // conjugate
    CHECK(x * y == q(1));             // norm of a unit
    CHECK((-x).abs() == x);
    CHECK(x + y == q(6));
    CHECK(x.inverse() == y);  // (3+2s)(3-2s) = 1
    CHECK((x * x) == surd(17, 1, 12, 1, 2));

    Scalar r = q(5, 7);
    CHECK((x + r) == surd(26, 7, 2, 1, 2));  // rational embeds freely

    Scalar z3 = Scalar::sqrt_of(3);
    CHECK_THROWS_AS(x + z3, std::domain_error);  // distinct extensions rejected
    CHECK_THROWS(Scalar(mpq_class(1), mpq_class(1), 12));  // 12 not squarefree
    CHECK_THROWS(Scalar(mpq_class(1), mpq_class(1), 0));
}

TEST_CASE("comparisons") {
    CHECK(cmp(Scalar::sqrt_of(2), q(1)) == Cmp::Greater);
    CHECK(cmp(surd(1, 2, 0, 1, 2), q(1, 2)) == Cmp::Equal);
    CHECK(cmp(surd(1, 2, 0, 1, 0), q(1, 2)) == Cmp::Equal);

    // 2 + sqrt(3) < 3 + 2*sqrt(2), bracketed by the interval oracle
    Scalar lhs = surd(2, 1, 1, 1, 3), rhs = surd(3, 1, 2, 1, 2);
    Iv li = iv_add({2, 2}, iv_sqrt(3));
    Iv ri = iv_add({3, 3}, iv_scale(2, iv_sqrt(2)));
    REQUIRE(li.hi < ri.lo);  // oracle says disjoint, lhs below
    CHECK(cmp(lhs, rhs) == Cmp::Less);

    // mixed-sign cases that force the squaring path
    CHECK(surd(-4, 1, 3, 1, 2).sign() == 1);    // 3*sqrt(2) = 4.24 > 4
    CHECK(surd(-5, 1, 3, 1, 2).sign() == -1);   // 3*sqrt(2) < 5
    CHECK(surd(7, 1, -5, 1, 2).sign() == -1);   // 5*sqrt(2) = 7.07 > 7
    CHECK(surd(8, 1, -5, 1, 2).sign() == 1);
}

TEST_CASE("to_float enclosures") {
    SUBCASE("exact cases") {
        auto z = q(0).to_float();
        CHECK(z.value == 0.0);
        CHECK(z.bound == 0.0);
        auto h = q(1, 2).to_float();
        CHECK(h.value == 0.5);
        CHECK(h.bound == 0.0);
    }
    SUBCASE("non-dyadic rational has a nonzero but tiny bound") {
        auto t = q(1, 3).to_float();
        CHECK(t.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(t.bound > 0.0);
        CHECK(t.bound <= 4 * ulp_of(t.value));
    }
    SUBCASE("3+2*sqrt(2) against the decimal oracle") {
        Scalar x = surd(3, 1, 2, 1, 2);
        auto f = x.to_float();
        CHECK(f.value == doctest::Approx(5.82842712474619).epsilon(1e-15));
        CHECK(f.bound <= 4 * ulp_of(f.value));
        mpq_class lo, hi;
        decimal_enclosure(x, 40, lo, hi);
        CHECK(mpq_class(f.value) - mpq_class(f.bound) <= lo);
        CHECK(hi <= mpq_class(f.value) + mpq_class(f.bound));
    }
    SUBCASE("random surds stay inside their certified bounds") {
        for (int k = 0; k < 200; ++k) {
            Scalar x = random_sqrt2();
            auto f = x.to_float();
            CHECK(f.bound <= 4 * ulp_of(f.value) + 5e-324);
            mpq_class lo, hi;
            decimal_enclosure(x, 40, lo, hi);
            CHECK(mpq_class(f.value) - mpq_class(f.bound) <= lo);
            CHECK(hi <= mpq_class(f.value) + mpq_class(f.bound));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    auto check_triple = [](const Scalar& x, const Scalar& y, const Scalar& z) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    };
    for (int k = 0; k < 150; ++k)
        check_triple(random_rational(), random_rational(), random_rational());
    for (int k = 0; k < 150; ++k) check_triple(random_sqrt2(), random_sqrt2(), random_sqrt2());
}

TEST_CASE("order compatibility on random pairs") {
    for (int k = 0; k < 200; ++k) {
        Scalar x = random_sqrt2(), y = random_sqrt2(), z = random_sqrt2();
        if (x < y) {
            CHECK(x + z < y + z);
            if (z.sign() > 0) CHECK(x * z < y * z);
        }
        // cmp must agree with the float sign whenever the enclosures are disjoint
        auto fx = x.to_float(), fy = y.to_float();
        if (fx.value + fx.bound < fy.value - fy.bound) CHECK(x < y);
        if (fy.value + fy.bound < fx.value - fx.bound) CHECK(y < x);
    }
}

TEST_CASE("serialization grammar") {
    CHECK(q(5, 6).str() == "5/6");
    CHECK(q(-3).str() == "-3");
    CHECK(surd(3, 1, 2, 1, 2).str() == "3+2*s");
    CHECK(surd(-1, 1, -1, 2, 2).str() == "-1-1/2*s");
    CHECK(surd(0, 1, -2, 3, 5).str() == "-2/3*s");
    CHECK(Scalar::sqrt_of(7).str() == "1*s");

    CHECK(Scalar::parse("5/6", 0) == q(5, 6));
    CHECK(Scalar::parse("3+2*s", 2) == surd(3, 1, 2, 1, 2));
    CHECK(Scalar::parse("-1-1/2*s", 2) == surd(-1, 1, -1, 2, 2));
    CHECK(Scalar::parse("-2/3*s", 5) == surd(0, 1, -2, 3, 5));
    CHECK(Scalar::parse("+1/2", 0) == q(1, 2));
    CHECK_THROWS(Scalar::parse("1/0", 0));
    CHECK_THROWS(Scalar::parse("2*s", 0));   // surd without a declared extension
    CHECK_THROWS(Scalar::parse("1.5", 0));   // decimals are CLI-only
    CHECK_THROWS(Scalar::parse("", 0));
    CHECK_THROWS(Scalar::parse("1+2", 0));

    for (int k = 0; k < 200; ++k) {  // round-trip property
        Scalar x = random_sqrt2();
        CHECK(Scalar::parse(x.str(), 2) == x);
        Scalar r = random_rational();
        CHECK(Scalar::parse(r.str(), 0) == r);
    }
}

TEST_CASE("CLI scalar parsing") {
    CHECK(Scalar::parse_cli("3+2*s@2") == surd(3, 1, 2, 1, 2));
    CHECK(Scalar::parse_cli("0.25") == q(1, 4));
    CHECK(Scalar::parse_cli("1e-3") == q(1, 1000));
    CHECK(Scalar::parse_cli("-2.5e2") == q(-250));
    CHECK(Scalar::parse_cli("7/2") == q(7, 2));
    CHECK(Scalar::parse_cli("1.5+0.5*s@3") == surd(3, 2, 1, 2, 3));
    CHECK_THROWS(Scalar::parse_cli("3+2*s@x"));
}
