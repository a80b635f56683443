#pragma once

#include <cstdint>

#include "archimedes/chains.hpp"
#include "archimedes/interval.hpp"

namespace archimedes {

// Double squeeze of a circle of radius r between inscribed and circumscribed
// regular n-gons, n = 6 * 2^doublings. Everything is derived from the
// polygon semiperimeter pair through rational interval operations alone:
//   apothem (inscribed)      r * p/P
//   inscribed polygon area   r^2 * p^2/P        circumscribed   r^2 * P
//   inscribed perimeter      2r * p             circumscribed   2r * P
//   half * C * r bracket     r^2 * p .. r^2 * P
struct SqueezeState {
    std::int64_t sides = 0;
    int doublings = 0;
    Rational radius;
    Interval apothem;
    Interval area_lower;
    Interval area_upper;
    Interval circumference_lower;
    Interval circumference_upper;
    Interval half_cr_lower;
    Interval half_cr_upper;

    // Combined enclosures of the circle's area and of half*C*r.
    Interval area_bracket() const;
    Interval half_cr_bracket() const;
};

SqueezeState squeeze_state(int doublings, const Rational& radius,
                           int precision_bits = kDefaultPrecisionBits);

// A = (1/2) C r as a squeeze-to-tolerance certificate: the two brackets must
// overlap and both be narrower than `tolerance`. Throws ToleranceUnreachable
// (with a depth estimate from the 1/n^2 width model) when the requested
// depth cannot deliver the tolerance.
struct Prop1Certificate {
    bool certified = false;
    Rational gap;  // the larger of the two bracket widths
    Interval area;
    Interval half_cr;
};
Prop1Certificate verify_prop1(int doublings, const Rational& radius, const Rational& tolerance,
                              int precision_bits = kDefaultPrecisionBits);

// Certified chord < arc < tangent for theta = pi/n with n = 6 * 2^j: the
// chord and tangent come from the polygon pair exactly (2 sin(pi/n) = 2p/n,
// 2 tan(pi/n) = 2P/n), the arc from a deeper pi enclosure. Throws
// UnsupportedAngle outside the doubling family.
SectorBounds verify_sector(const Rational& theta_over_pi, int pi_doublings,
                           int precision_bits = kDefaultPrecisionBits);

// Euclid XII.2: the enclosure of A(r1)/A(r2) contains (r1/r2)^2. The area
// formulas scale exactly by r^2, so this certifies with zero gap.
bool verify_euclid_xii2(const Rational& r1, const Rational& r2, int doublings,
                        int precision_bits = kDefaultPrecisionBits);

}  // namespace archimedes
