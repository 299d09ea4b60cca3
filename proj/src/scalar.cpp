#include "bandgraph/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace bandgraph {

bool is_squarefree(long n) {
    if (n < 0) return false;
    if (n < 4) return true;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw std::invalid_argument("Scalar: negative extension d");
    if (d_ == 1) {  // sqrt(1) = 1 folds into the rational part
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    if (d_ == 0 && b_ != 0)
        throw std::invalid_argument("Scalar: surd coefficient with d = 0");
    if (!is_squarefree(d_)) throw std::invalid_argument("Scalar: d must be squarefree");
    normalize();
}

Scalar Scalar::fraction(long p, long q) {
    if (q == 0) throw std::invalid_argument("Scalar: zero denominator");
    mpq_class r(p, q);
    r.canonicalize();
    return Scalar(std::move(r));
}

Scalar Scalar::sqrt_of(long d) { return Scalar(mpq_class(0), mpq_class(1), d); }

void Scalar::normalize() {
    if (b_ == 0) d_ = 0;
}

long Scalar::merge_ext(const Scalar& x, const Scalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw std::domain_error("Scalar: mixing distinct extensions Q(sqrt(" +
                            std::to_string(x.d_) + ")) and Q(sqrt(" + std::to_string(y.d_) +
                            "))");
}

Scalar Scalar::operator-() const { return Scalar(raw_tag{}, -a_, -b_, d_); }

Scalar operator+(const Scalar& x, const Scalar& y) {
    long d = Scalar::merge_ext(x, y);
    return Scalar(Scalar::raw_tag{}, x.a_ + y.a_, x.b_ + y.b_, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    long d = Scalar::merge_ext(x, y);
    return Scalar(Scalar::raw_tag{}, x.a_ - y.a_, x.b_ - y.b_, d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    long d = Scalar::merge_ext(x, y);
    if (x.d_ == 0 && y.d_ == 0) return Scalar(Scalar::raw_tag{}, x.a_ * y.a_, mpq_class(0), 0);
    // (a1 + b1*s)(a2 + b2*s) = a1*a2 + b1*b2*d + (a1*b2 + b1*a2)*s
    mpq_class a = x.a_ * y.a_;
    if (x.b_ != 0 && y.b_ != 0) a += x.b_ * y.b_ * d;
    return Scalar(Scalar::raw_tag{}, std::move(a), x.a_ * y.b_ + x.b_ * y.a_, d);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (d_ == 0) return Scalar(raw_tag{}, 1 / a_, mpq_class(0), 0);
    // 1/(a + b*s) = (a - b*s) / (a^2 - b^2 d); the norm cannot vanish since
    // sqrt(d) is irrational.
    mpq_class norm = a_ * a_ - b_ * b_ * d_;
    return Scalar(raw_tag{}, a_ / norm, -b_ / norm, d_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

int Scalar::sign() const {
    int sa = sgn(a_);
    if (b_ == 0) return sa;
    int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d, one squaring only.
    mpq_class t = a_ * a_ - b_ * b_ * d_;
    int st = sgn(t);
    if (st == 0) return 0;  // only possible when d is a perfect square; excluded
    return st > 0 ? sa : sb;
}

Scalar Scalar::abs() const { return sign() >= 0 ? *this : -*this; }

namespace {

// Exact enclosure of sqrt(d) with denominator 2^k: [s, s+1]/2^k.
void sqrt_enclosure(long d, unsigned k, mpq_class& lo, mpq_class& hi) {
    mpz_class scaled = mpz_class(d) << (2 * k);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class denom = mpz_class(1) << k;
    lo = mpq_class(s, denom);
    lo.canonicalize();
    hi = mpq_class(s + 1, denom);
    hi.canonicalize();
}

// Exact rational enclosure of a + b*sqrt(d) at 2^-k sqrt resolution.
void value_enclosure(const Scalar& x, unsigned k, mpq_class& lo, mpq_class& hi) {
    if (x.ext() == 0) {
        lo = hi = x.rat_part();
        return;
    }
    mpq_class slo, shi;
    sqrt_enclosure(x.ext(), k, slo, shi);
    if (x.surd_part() > 0) {
        lo = x.rat_part() + x.surd_part() * slo;
        hi = x.rat_part() + x.surd_part() * shi;
    } else {
        lo = x.rat_part() + x.surd_part() * shi;
        hi = x.rat_part() + x.surd_part() * slo;
    }
}

}  // namespace

Cmp cmp(const Scalar& x, const Scalar& y) {
    if (x.d_ == y.d_ || x.d_ == 0 || y.d_ == 0) {
        int s = (x - y).sign();
        return s < 0 ? Cmp::Less : s > 0 ? Cmp::Greater : Cmp::Equal;
    }
    // Distinct extensions share only the rationals, and both sides here are
    // irrational, so the values differ; refine enclosures until they split.
    for (unsigned k = 32;; k *= 2) {
        if (k > (1u << 20)) throw std::runtime_error("Scalar: cross-extension cmp stalled");
        mpq_class xlo, xhi, ylo, yhi;
        value_enclosure(x, k, xlo, xhi);
        value_enclosure(y, k, ylo, yhi);
        if (xhi < ylo) return Cmp::Less;
        if (yhi < xlo) return Cmp::Greater;
    }
}

namespace {

// Nearest double to the exact rational q, by exact candidate comparison.
double nearest_double(const mpq_class& q) {
    double v = mpq_get_d(q.get_mpq_t());  // truncated toward zero, < 1 ulp off
    if (!std::isfinite(v)) return v;
    double best = v;
    mpq_class err = ::abs(mpq_class(q - mpq_class(v)));
    for (double cand : {std::nextafter(v, std::numeric_limits<double>::infinity()),
                        std::nextafter(v, -std::numeric_limits<double>::infinity())}) {
        if (!std::isfinite(cand)) continue;
        mpq_class e = ::abs(mpq_class(q - mpq_class(cand)));
        if (e < err) {
            err = e;
            best = cand;
        }
    }
    return best;
}

// Smallest double >= the exact rational q (q assumed tiny and nonnegative).
double double_upper(const mpq_class& q) {
    double v = mpq_get_d(q.get_mpq_t());
    while (mpq_class(v) < q) v = std::nextafter(v, std::numeric_limits<double>::infinity());
    return v;
}

}  // namespace

Scalar::FloatApprox Scalar::to_float() const {
    if (d_ == 0) {
        double v = nearest_double(a_);
        mpq_class err = ::abs(mpq_class(a_ - mpq_class(v)));
        return {v, double_upper(err)};
    }
    // Enclose a + b*sqrt(d) between exact rationals, tightening until the
    // width is negligible next to the value itself.
    mpq_class lo, hi;
    for (unsigned k = 96;; k *= 2) {
        if (k > (1u << 20)) throw std::runtime_error("Scalar::to_float: enclosure stalled");
        value_enclosure(*this, k, lo, hi);
        // tight enough when width <= |midpoint| * 2^-55
        mpq_class width = hi - lo;
        mpq_class mid = (lo + hi) / 2;
        if (mid != 0 && width * (mpz_class(1) << 55) <= ::abs(mid)) break;
    }
    mpq_class mid = (lo + hi) / 2;
    double v = nearest_double(mid);
    mpq_class err = ::abs(mpq_class(mid - mpq_class(v))) + (hi - lo) / 2;
    return {v, double_upper(err)};
}

std::string Scalar::str() const {
    if (d_ == 0) return a_.get_str();
    mpq_class babs = ::abs(b_);
    std::string surd = babs.get_str() + "*s";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + surd;
    return a_.get_str() + (b_ < 0 ? "-" : "+") + surd;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("scalar parse error at offset " + std::to_string(pos) +
                                    " in \"" + std::string(s) + "\": " + why);
    }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

mpz_class parse_integer(Cursor& c, bool allow_sign) {
    size_t start = c.pos;
    if (allow_sign && (c.peek() == '+' || c.peek() == '-')) ++c.pos;
    if (!is_digit(c.peek())) c.fail("expected digits");
    while (is_digit(c.peek())) ++c.pos;
    return mpz_class(std::string(c.s.substr(start, c.pos - start)), 10);
}

// rational := INT ["/" POSINT]; with allow_decimal, also accepts decimal and
// scientific literals, parsed to the exact rational they denote.
mpq_class parse_rational(Cursor& c, bool allow_sign, bool allow_decimal) {
    bool neg = false;
    if (allow_sign && (c.peek() == '+' || c.peek() == '-')) {
        neg = c.peek() == '-';
        ++c.pos;
    }
    mpz_class intpart = parse_integer(c, false);
    mpq_class value(intpart);
    if (allow_decimal && c.peek() == '.') {
        ++c.pos;
        size_t start = c.pos;
        mpz_class frac = is_digit(c.peek()) ? parse_integer(c, false) : mpz_class(0);
        size_t ndigits = c.pos - start;
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, ndigits);
        mpq_class fq(frac, pow10);
        fq.canonicalize();
        value += fq;
    }
    if (allow_decimal && (c.peek() == 'e' || c.peek() == 'E')) {
        ++c.pos;
        bool eneg = false;
        if (c.peek() == '+' || c.peek() == '-') {
            eneg = c.peek() == '-';
            ++c.pos;
        }
        mpz_class expo = parse_integer(c, false);
        if (!expo.fits_ulong_p() || expo.get_ui() > 4096) c.fail("exponent out of range");
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, expo.get_ui());
        if (eneg)
            value /= mpq_class(pow10);
        else
            value *= mpq_class(pow10);
        value.canonicalize();
    }
    if (c.peek() == '/') {
        ++c.pos;
        mpz_class den = parse_integer(c, false);
        if (den <= 0) c.fail("denominator must be positive");
        value /= mpq_class(den);
        value.canonicalize();
    }
    return neg ? mpq_class(-value) : value;
}

Scalar parse_impl(std::string_view text, long d, bool allow_decimal) {
    Cursor c{text};
    if (c.done()) c.fail("empty scalar");
    mpq_class first = parse_rational(c, true, allow_decimal);
    if (c.done()) return Scalar(std::move(first));  // pure rational
    if (c.peek() == '*') {
        ++c.pos;
        if (c.peek() != 's') c.fail("expected 's' after '*'");
        ++c.pos;
        if (!c.done()) c.fail("trailing characters");
        return Scalar(mpq_class(0), std::move(first), d);
    }
    if (c.peek() != '+' && c.peek() != '-') c.fail("expected '+', '-' or '*s'");
    bool neg = c.peek() == '-';
    ++c.pos;
    mpq_class second = parse_rational(c, false, allow_decimal);
    if (c.peek() != '*') c.fail("expected '*s' after surd coefficient");
    ++c.pos;
    if (c.peek() != 's') c.fail("expected 's' after '*'");
    ++c.pos;
    if (!c.done()) c.fail("trailing characters");
    if (neg) second = -second;
    return Scalar(std::move(first), std::move(second), d);
}

}  // namespace

Scalar Scalar::parse(std::string_view text, long d) { return parse_impl(text, d, false); }

Scalar Scalar::parse_cli(std::string_view text) {
    long d = 0;
    size_t at = text.rfind('@');
    if (at != std::string_view::npos) {
        std::string dstr(text.substr(at + 1));
        if (dstr.empty() || dstr.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("scalar: malformed extension suffix '@" + dstr + "'");
        d = std::stol(dstr);
        text = text.substr(0, at);
    }
    return parse_impl(text, d, true);
}

}  // namespace bandgraph
