#pragma once

#include <string>
#include <utility>

#include "archimedes/rational.hpp"

namespace archimedes {

inline constexpr int kDefaultPrecisionBits = 128;

// Closed interval with exact rational endpoints. Every operation rounds
// outward, so the true real result of an operation on members of the inputs
// always lies in the output (containment soundness).
//
// Endpoint trimming: after each operation an endpoint whose denominator
// exceeds 2^precision_bits is rounded outward onto the grid of multiples of
// 2^-precision_bits. Endpoints that already fit stay exact, which keeps
// point intervals like [1/3, 1/3] unchanged while capping denominator growth
// across long iterations.
class Interval {
public:
    Interval() : lo_(0), hi_(0), bits_(kDefaultPrecisionBits) {}
    explicit Interval(const Rational& point, int precision_bits = kDefaultPrecisionBits);
    Interval(const Rational& lo, const Rational& hi, int precision_bits = kDefaultPrecisionBits);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    int precision_bits() const { return bits_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    Interval with_precision(int precision_bits) const;

    friend Interval operator+(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x, const Interval& y);
    friend Interval operator*(const Interval& x, const Interval& y);
    friend Interval operator/(const Interval& x, const Interval& y);  // throws DivisionByIntervalContainingZero
    Interval operator-() const;

private:
    Rational lo_, hi_;
    int bits_;

    Interval trimmed() const;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Dispatch form of the four arithmetic operations.
Interval interval_arith(ArithOp op, const Interval& x, const Interval& y);

// Certified square root: the result contains sqrt of every member of x.
// Requires lo(x) >= 0, otherwise throws NegativeRadicand.
Interval interval_sqrt(const Interval& x);

// Three-valued certified comparison; Overlapping is never coerced to
// equality.
enum class IntervalOrder { CertainlyLess, CertainlyGreater, Overlapping };
IntervalOrder interval_compare(const Interval& x, const Interval& y);

inline bool certainly_less(const Interval& x, const Interval& y) {
    return interval_compare(x, y) == IntervalOrder::CertainlyLess;
}

// Smallest interval containing both arguments.
Interval interval_hull(const Interval& x, const Interval& y);

// Intersection; arguments must intersect.
Interval interval_meet(const Interval& x, const Interval& y);

// Decimal rendering with directed rounding: lo rounds toward -inf, hi toward
// +inf, both with exactly `digits` fractional digits. Printed digits never
// overstate the enclosure.
std::pair<std::string, std::string> to_decimal(const Interval& x, int digits);

// Directed decimal rendering of a single rational.
std::string decimal_floor(const Rational& q, int digits);
std::string decimal_ceil(const Rational& q, int digits);

// Scaling by an exact rational: endpoints are exact products, never
// trimmed, so algebraic scaling identities hold endpoint for endpoint.
Interval scale(const Interval& x, const Rational& factor);

}  // namespace archimedes
