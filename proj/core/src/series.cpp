#include "archimedes/series.hpp"

#include <stdexcept>

namespace archimedes {

namespace {

constexpr long kMaxArgMagnitude = 64;

void check_argument(const Rational& x) {
    if (x.abs() > Rational(kMaxArgMagnitude))
        throw std::invalid_argument("series argument out of supported range");
}

Rational remainder_threshold(int bits) {
    return pow2(-(bits + 4));
}

// Shared core of sin/cos: sum of (-1)^k x^(start + 2k) / (start + 2k)! with
// Lagrange remainder bounded by the magnitude of the first omitted term.
Interval alternating_series(const Rational& x, int bits, bool odd) {
    const int work_bits = bits + 8;
    const Interval arg(x, work_bits);
    const Interval arg_sq = arg * arg;
    const Rational mag = x.abs();
    const Rational mag_sq = mag * mag;

    Interval term = odd ? arg : Interval(Rational(1), work_bits);
    Rational term_mag = odd ? mag : Rational(1);
    long degree = odd ? 1 : 0;

    Interval sum = term;
    const Rational threshold = remainder_threshold(bits);
    while (true) {
        // advance degree by 2
        const Rational divisor(mpz_class(degree + 1) * mpz_class(degree + 2), mpz_class(1));
        term = -(term * arg_sq) / Interval(divisor, work_bits);
        term_mag = term_mag * mag_sq / divisor;
        degree += 2;
        sum = sum + term;
        if (term_mag < threshold) break;
        if (degree > 4000) throw std::logic_error("series failed to converge");
    }
    // The first omitted term bounds the truncation error.
    const Rational next_divisor(mpz_class(degree + 1) * mpz_class(degree + 2), mpz_class(1));
    const Rational tail = term_mag * mag_sq / next_divisor;
    return sum + Interval(-tail, tail, work_bits);
}

}  // namespace

Interval sin_point(const Rational& x, int precision_bits) {
    check_argument(x);
    return alternating_series(x, precision_bits, true);
}

Interval cos_point(const Rational& x, int precision_bits) {
    check_argument(x);
    return alternating_series(x, precision_bits, false);
}

Interval exp_point(const Rational& x, int precision_bits) {
    check_argument(x);
    if (x.sign() < 0) {
        const Interval one(Rational(1), precision_bits + 8);
        return one / exp_point(-x, precision_bits + 8);
    }
    const int work_bits = precision_bits + 8;
    const Interval arg(x, work_bits);

    Interval term(Rational(1), work_bits);
    Rational term_mag(1);
    Interval sum = term;
    const Rational threshold = remainder_threshold(precision_bits);
    long k = 0;
    while (true) {
        ++k;
        const Rational divisor(k);
        term = term * arg / Interval(divisor, work_bits);
        term_mag = term_mag * x / divisor;
        sum = sum + term;
        // Stop once the geometric tail estimate is valid (ratio <= 1/2) and small.
        if (Rational(2) * x <= Rational(k + 1) && term_mag < threshold) break;
        if (k > 4000) throw std::logic_error("series failed to converge");
    }
    // Remaining terms are dominated by a geometric series with ratio <= 1/2.
    const Rational tail = Rational(2) * term_mag;
    return sum + Interval(Rational(0), tail, work_bits);
}

namespace {

// Midpoint of x rounded to a manageable dyadic, plus a radius that still
// covers the whole interval.
std::pair<Rational, Rational> center_radius(const Interval& x) {
    const Rational mid = dyadic_floor(x.midpoint(), static_cast<unsigned>(x.precision_bits()));
    const Rational radius = max(x.hi() - mid, mid - x.lo());
    return {mid, radius};
}

}  // namespace

Interval sin_enclosure(const Interval& x) {
    if (x.is_point()) return sin_point(x.lo(), x.precision_bits());
    const auto [mid, radius] = center_radius(x);
    const Interval at_mid = sin_point(mid, x.precision_bits());
    return at_mid + Interval(-radius, radius, x.precision_bits());
}

Interval cos_enclosure(const Interval& x) {
    if (x.is_point()) return cos_point(x.lo(), x.precision_bits());
    const auto [mid, radius] = center_radius(x);
    const Interval at_mid = cos_point(mid, x.precision_bits());
    return at_mid + Interval(-radius, radius, x.precision_bits());
}

Interval exp_enclosure(const Interval& x) {
    if (x.is_point()) return exp_point(x.lo(), x.precision_bits());
    const Interval lo_val = exp_point(x.lo(), x.precision_bits());
    const Interval hi_val = exp_point(x.hi(), x.precision_bits());
    return Interval(lo_val.lo(), hi_val.hi(), x.precision_bits());
}

}  // namespace archimedes
