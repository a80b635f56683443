#include "archimedes/exhaustion.hpp"

#include <stdexcept>
#include <string>

#include "archimedes/errors.hpp"
#include "archimedes/polygon.hpp"

namespace archimedes {

Interval SqueezeState::area_bracket() const {
    return Interval(area_lower.lo(), area_upper.hi(), area_lower.precision_bits());
}

Interval SqueezeState::half_cr_bracket() const {
    return Interval(half_cr_lower.lo(), half_cr_upper.hi(), half_cr_lower.precision_bits());
}

SqueezeState squeeze_state(int doublings, const Rational& radius, int precision_bits) {
    if (radius.sign() <= 0) throw std::invalid_argument("radius must be positive");
    if (doublings < 0) throw std::invalid_argument("doublings must be >= 0");

    PolygonPair gon = hexagon_init(precision_bits);
    for (int k = 0; k < doublings; ++k) gon = double_step(gon);

    const Rational r_sq = radius * radius;
    SqueezeState s;
    s.sides = gon.sides;
    s.doublings = doublings;
    s.radius = radius;
    s.apothem = scale(gon.inscribed / gon.circumscribed, radius);
    s.area_lower = scale(gon.inscribed * gon.inscribed / gon.circumscribed, r_sq);
    s.area_upper = scale(gon.circumscribed, r_sq);
    s.circumference_lower = scale(gon.inscribed, Rational(2) * radius);
    s.circumference_upper = scale(gon.circumscribed, Rational(2) * radius);
    s.half_cr_lower = scale(gon.inscribed, r_sq);
    s.half_cr_upper = scale(gon.circumscribed, r_sq);

    if (s.area_lower.hi() >= s.area_upper.lo() || s.circumference_lower.hi() >= s.circumference_upper.lo())
        throw PrecisionExhausted("squeeze brackets no longer separated; retry with more precision bits");
    return s;
}

Prop1Certificate verify_prop1(int doublings, const Rational& radius, const Rational& tolerance,
                              int precision_bits) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    const SqueezeState s = squeeze_state(doublings, radius, precision_bits);

    Prop1Certificate cert;
    cert.area = s.area_bracket();
    cert.half_cr = s.half_cr_bracket();
    const Rational width_area = cert.area.width();
    const Rational width_half_cr = cert.half_cr.width();
    cert.gap = max(width_area, width_half_cr);

    if (cert.gap >= tolerance) {
        // Bracket widths shrink by a factor of four per doubling; estimate
        // the depth that reaches the tolerance.
        int extra = 0;
        Rational projected = cert.gap;
        while (projected >= tolerance && extra < 64) {
            projected = projected / Rational(4);
            ++extra;
        }
        throw ToleranceUnreachable(
            "tolerance unreachable at " + std::to_string(doublings) + " doublings; approximately " +
                std::to_string(doublings + extra) + " needed",
            doublings + extra);
    }

    cert.certified = cert.area.intersects(cert.half_cr);
    return cert;
}

SectorBounds verify_sector(const Rational& theta_over_pi, int pi_doublings, int precision_bits) {
    // theta = pi/n with n = 6 * 2^j
    if (theta_over_pi.sign() <= 0 || !(theta_over_pi < Rational(1, 2)))
        throw UnsupportedAngle("theta must lie in (0, pi/2)");
    if (theta_over_pi.numerator() != 1)
        throw UnsupportedAngle("theta/pi must be a unit fraction 1/(6*2^j)");
    const mpz_class den = theta_over_pi.denominator();
    if (den % 6 != 0) throw UnsupportedAngle("theta/pi denominator must be 6*2^j");
    mpz_class pow = den / 6;
    int j = 0;
    while (pow > 1) {
        if (pow % 2 != 0) throw UnsupportedAngle("theta/pi denominator must be 6*2^j");
        pow /= 2;
        ++j;
    }
    if (pi_doublings <= j)
        throw std::invalid_argument("pi_doublings must exceed the angle's doubling index");

    PolygonPair gon = hexagon_init(precision_bits);
    for (int k = 0; k < j; ++k) gon = double_step(gon);
    const Rational two_over_n(mpz_class(2), den);

    SectorBounds bounds;
    bounds.theta = scale(pi_enclosure(pi_doublings, precision_bits), Rational(mpz_class(1), den));
    bounds.chord = scale(gon.inscribed, two_over_n);
    bounds.tangent = scale(gon.circumscribed, two_over_n);
    bounds.arc = scale(pi_enclosure(pi_doublings, precision_bits), two_over_n);

    if (!(bounds.chord.hi() < bounds.arc.lo()) || !(bounds.arc.hi() < bounds.tangent.lo()))
        throw PrecisionExhausted("sector bounds not separated; raise pi_doublings or precision");
    return bounds;
}

bool verify_euclid_xii2(const Rational& r1, const Rational& r2, int doublings, int precision_bits) {
    if (r1.sign() <= 0 || r2.sign() <= 0) throw std::invalid_argument("radii must be positive");
    const SqueezeState s1 = squeeze_state(doublings, r1, precision_bits);
    const SqueezeState s2 = squeeze_state(doublings, r2, precision_bits);
    const Interval ratio = s1.area_bracket() / s2.area_bracket();
    const Rational expected = (r1 / r2) * (r1 / r2);
    return ratio.contains(expected);
}

}  // namespace archimedes
