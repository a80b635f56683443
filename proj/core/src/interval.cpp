#include "archimedes/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "archimedes/errors.hpp"

namespace archimedes {

namespace {

// An endpoint participates in trimming only once its denominator outgrows
// the 2^bits cap; exact small-denominator values pass through unchanged.
bool needs_trim(const Rational& q, int bits) {
    const mpz_class den = q.denominator();
    const size_t size = mpz_sizeinbase(den.get_mpz_t(), 2);
    if (size <= static_cast<size_t>(bits)) return false;
    if (size > static_cast<size_t>(bits) + 1) return true;
    // exactly bits+1 binary digits: only 2^bits itself is still on the grid
    return mpz_popcount(den.get_mpz_t()) != 1;
}

Rational trim_down(const Rational& q, int bits) {
    return needs_trim(q, bits) ? dyadic_floor(q, static_cast<unsigned>(bits)) : q;
}

Rational trim_up(const Rational& q, int bits) {
    return needs_trim(q, bits) ? dyadic_ceil(q, static_cast<unsigned>(bits)) : q;
}

int combined_bits(const Interval& x, const Interval& y) {
    return std::min(x.precision_bits(), y.precision_bits());
}

}  // namespace

Interval::Interval(const Rational& point, int precision_bits)
    : lo_(point), hi_(point), bits_(precision_bits) {
    if (precision_bits < 1) throw std::invalid_argument("precision_bits must be positive");
}

Interval::Interval(const Rational& lo, const Rational& hi, int precision_bits)
    : lo_(lo), hi_(hi), bits_(precision_bits) {
    if (precision_bits < 1) throw std::invalid_argument("precision_bits must be positive");
    if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::trimmed() const {
    Interval r = *this;
    r.lo_ = trim_down(lo_, bits_);
    r.hi_ = trim_up(hi_, bits_);
    return r;
}

Interval Interval::with_precision(int precision_bits) const {
    Interval r(trim_down(lo_, precision_bits), trim_up(hi_, precision_bits), precision_bits);
    return r;
}

Interval operator+(const Interval& x, const Interval& y) {
    Interval r(x.lo_ + y.lo_, x.hi_ + y.hi_, combined_bits(x, y));
    return r.trimmed();
}

Interval operator-(const Interval& x, const Interval& y) {
    Interval r(x.lo_ - y.hi_, x.hi_ - y.lo_, combined_bits(x, y));
    return r.trimmed();
}

Interval Interval::operator-() const {
    return Interval(-hi_, -lo_, bits_);
}

Interval operator*(const Interval& x, const Interval& y) {
    const Rational a = x.lo_ * y.lo_;
    const Rational b = x.lo_ * y.hi_;
    const Rational c = x.hi_ * y.lo_;
    const Rational d = x.hi_ * y.hi_;
    Interval r(min(min(a, b), min(c, d)), max(max(a, b), max(c, d)), combined_bits(x, y));
    return r.trimmed();
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.lo_.sign() <= 0 && y.hi_.sign() >= 0)
        throw DivisionByIntervalContainingZero("interval division by enclosure of zero");
    const Rational a = x.lo_ / y.lo_;
    const Rational b = x.lo_ / y.hi_;
    const Rational c = x.hi_ / y.lo_;
    const Rational d = x.hi_ / y.hi_;
    Interval r(min(min(a, b), min(c, d)), max(max(a, b), max(c, d)), combined_bits(x, y));
    return r.trimmed();
}

Interval interval_arith(ArithOp op, const Interval& x, const Interval& y) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
    }
    throw std::logic_error("unknown ArithOp");
}

namespace {

// floor(sqrt(q)) scaled onto the 2^-shift grid: returns r/2^shift with
// (r/2^shift)^2 <= q. Exact when q is a perfect square of a grid point.
Rational sqrt_lower(const Rational& q, unsigned shift) {
    // floor(q * 4^shift)
    mpz_class scaled_num = q.numerator() << (2 * shift);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return Rational(root, mpz_class(1) << shift);
}

// Upper counterpart: returns r/2^shift with (r/2^shift)^2 >= q.
Rational sqrt_upper(const Rational& q, unsigned shift) {
    mpz_class scaled_num = q.numerator() << (2 * shift);
    mpz_class n, rem;
    mpz_cdiv_qr(n.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    mpz_class root, sqrt_rem;
    mpz_sqrtrem(root.get_mpz_t(), sqrt_rem.get_mpz_t(), n.get_mpz_t());
    if (sqrt_rem == 0 && rem == 0) return Rational(root, mpz_class(1) << shift);
    return Rational(root + 1, mpz_class(1) << shift);
}

}  // namespace

Interval interval_sqrt(const Interval& x) {
    if (x.lo().sign() < 0)
        throw NegativeRadicand("square root of interval with negative lower endpoint");
    const unsigned shift = static_cast<unsigned>(x.precision_bits());
    return Interval(sqrt_lower(x.lo(), shift), sqrt_upper(x.hi(), shift), x.precision_bits());
}

IntervalOrder interval_compare(const Interval& x, const Interval& y) {
    if (x.hi() < y.lo()) return IntervalOrder::CertainlyLess;
    if (x.lo() > y.hi()) return IntervalOrder::CertainlyGreater;
    return IntervalOrder::Overlapping;
}

Interval interval_hull(const Interval& x, const Interval& y) {
    return Interval(min(x.lo(), y.lo()), max(x.hi(), y.hi()), combined_bits(x, y));
}

Interval interval_meet(const Interval& x, const Interval& y) {
    if (!x.intersects(y)) throw std::invalid_argument("meet of disjoint intervals");
    return Interval(max(x.lo(), y.lo()), min(x.hi(), y.hi()), combined_bits(x, y));
}

namespace {

mpz_class pow10z(unsigned digits) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    return p;
}

// Renders v / 10^digits with exactly `digits` fractional digits; v may be
// negative.
std::string render_scaled(const mpz_class& v, int digits) {
    const bool negative = v < 0;
    std::string s = mpz_class(negative ? -v : v).get_str();
    if (digits == 0) return (negative ? "-" : "") + s;
    if (s.size() <= static_cast<size_t>(digits))
        s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    return (negative ? "-" : "") + s;
}

}  // namespace

std::string decimal_floor(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    mpz_class scaled_num = q.numerator() * pow10z(static_cast<unsigned>(digits));
    mpz_class v;
    mpz_fdiv_q(v.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    return render_scaled(v, digits);
}

std::string decimal_ceil(const Rational& q, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    mpz_class scaled_num = q.numerator() * pow10z(static_cast<unsigned>(digits));
    mpz_class v;
    mpz_cdiv_q(v.get_mpz_t(), scaled_num.get_mpz_t(), q.denominator().get_mpz_t());
    return render_scaled(v, digits);
}

std::pair<std::string, std::string> to_decimal(const Interval& x, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    return {decimal_floor(x.lo(), digits), decimal_ceil(x.hi(), digits)};
}

Interval scale(const Interval& x, const Rational& factor) {
    if (factor.sign() >= 0)
        return Interval(x.lo() * factor, x.hi() * factor, x.precision_bits());
    return Interval(x.hi() * factor, x.lo() * factor, x.precision_bits());
}

}  // namespace archimedes
