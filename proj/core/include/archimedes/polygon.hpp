#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "archimedes/interval.hpp"

namespace archimedes {

// State of the polygon side-doubling iteration on the unit circle:
// `inscribed` encloses the semiperimeter of the inscribed regular n-gon
// (n*sin(pi/n)) and `circumscribed` the semiperimeter of the circumscribed
// one (n*tan(pi/n)). The inscribed value increases and the circumscribed one
// decreases across doublings, and pi always lies between them.
struct PolygonPair {
    std::int64_t sides = 0;
    Interval inscribed;
    Interval circumscribed;
    int doublings = 0;
};

// Hexagon start: n = 6, inscribed semiperimeter exactly 3, circumscribed
// 2*sqrt(3). Requires precision_bits >= 16.
PolygonPair hexagon_init(int precision_bits);

// Square start: n = 4, inscribed 2*sqrt(2), circumscribed exactly 4. Feeds
// the dyadic-angle evaluations used by the quadratrix.
PolygonPair square_init(int precision_bits);

// One side-doubling: circumscribed_{2n} is the harmonic mean of the current
// pair, inscribed_{2n} the geometric mean of inscribed_n with it. Throws
// PrecisionExhausted once the enclosures are too wide to stay separated.
PolygonPair double_step(const PolygonPair& state);

// Enclosure of pi after `doublings` steps from the hexagon.
Interval pi_enclosure(int doublings, int precision_bits);

struct ConvergenceRow {
    int doublings = 0;
    std::int64_t sides = 0;
    Rational lower;
    Rational upper;
    Rational width;
    std::optional<Rational> width_ratio;  // previous width / current width, absent for the first row
};

std::vector<ConvergenceRow> convergence_report(int max_doublings, int precision_bits);

}  // namespace archimedes
