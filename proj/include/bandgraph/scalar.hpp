#ifndef BANDGRAPH_SCALAR_HPP
#define BANDGRAPH_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bandgraph {

enum class Cmp { Less, Equal, Greater };

/// Element of the real quadratic field Q(sqrt(d)): value = a + b*sqrt(d).
///
/// d is a squarefree non-negative integer; d == 0 marks a pure rational
/// (then b == 0). One extension per computation: operands must share d or
/// one of them must be rational. All values are kept in canonical form
/// (reduced fractions, b == 0 forces d = 0), so equality is structural.
class Scalar {
public:
    Scalar() : d_(0) {}
    Scalar(long v) : a_(v), d_(0) {}
    Scalar(int v) : a_(v), d_(0) {}
    explicit Scalar(mpq_class a) : a_(std::move(a)), d_(0) {}
    Scalar(mpq_class a, mpq_class b, long d);

    /// p/q as a Scalar; q must be nonzero.
    static Scalar fraction(long p, long q);
    /// sqrt(d) itself (d squarefree, d >= 2).
    static Scalar sqrt_of(long d);

    const mpq_class& rat_part() const { return a_; }
    const mpq_class& surd_part() const { return b_; }
    long ext() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_ == 0; }

    int sign() const;
    Scalar abs() const;
    Scalar inverse() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend Cmp cmp(const Scalar& x, const Scalar& y);
    friend bool operator==(const Scalar& x, const Scalar& y) { return cmp(x, y) == Cmp::Equal; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return cmp(x, y) != Cmp::Equal; }
    friend bool operator<(const Scalar& x, const Scalar& y) { return cmp(x, y) == Cmp::Less; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return cmp(x, y) == Cmp::Greater; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return cmp(x, y) != Cmp::Greater; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return cmp(x, y) != Cmp::Less; }

    struct FloatApprox {
        double value;  // nearest double to the enclosure midpoint
        double bound;  // guaranteed |value - exact| <= bound
    };
    FloatApprox to_float() const;
    double approx() const { return to_float().value; }

    /// Canonical serialization: "p/q" or "p/q+r/t*s" (sign folded into r,
    /// unit denominators omitted).
    std::string str() const;

    /// Strict grammar: rational | rational(+|-)rational*s | (+|-)?rational*s.
    /// `d` is the document-level extension the `s` symbol refers to.
    static Scalar parse(std::string_view text, long d);

    /// CLI variant: additionally accepts decimal/scientific literals in the
    /// rational slots (parsed exactly) and an optional "@<d>" suffix naming
    /// the extension, e.g. "3+2*s@2".
    static Scalar parse_cli(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& x);

private:
    struct raw_tag {};
    Scalar(raw_tag, mpq_class a, mpq_class b, long d)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    void normalize();
    static long merge_ext(const Scalar& x, const Scalar& y);

    mpq_class a_;  // rational part
    mpq_class b_;  // coefficient of sqrt(d); 0 when d_ == 0
    long d_;       // squarefree, >= 0
};

/// True iff n is squarefree (n >= 0; 0 and 1 count as squarefree here).
bool is_squarefree(long n);

}  // namespace bandgraph

#endif
