#include "archimedes/polygon.hpp"

#include <stdexcept>
#include <string>

#include "archimedes/errors.hpp"

namespace archimedes {

PolygonPair hexagon_init(int precision_bits) {
    if (precision_bits < 16) throw std::invalid_argument("precision_bits must be >= 16");
    PolygonPair s;
    s.sides = 6;
    s.doublings = 0;
    s.inscribed = Interval(Rational(3), precision_bits);
    s.circumscribed = interval_sqrt(Interval(Rational(12), precision_bits));
    return s;
}

PolygonPair square_init(int precision_bits) {
    if (precision_bits < 16) throw std::invalid_argument("precision_bits must be >= 16");
    PolygonPair s;
    s.sides = 4;
    s.doublings = 0;
    s.inscribed = interval_sqrt(Interval(Rational(8), precision_bits));
    s.circumscribed = Interval(Rational(4), precision_bits);
    return s;
}

PolygonPair double_step(const PolygonPair& state) {
    const Interval one(Rational(1), state.inscribed.precision_bits());
    const Interval two(Rational(2), state.inscribed.precision_bits());
    PolygonPair next;
    next.sides = state.sides * 2;
    next.doublings = state.doublings + 1;
    // 2pP/(p+P), written through reciprocals so each endpoint enters once;
    // the naive quotient form amplifies enclosure widths geometrically.
    next.circumscribed = two / (one / state.inscribed + one / state.circumscribed);
    next.inscribed = interval_sqrt(state.inscribed * next.circumscribed);
    if (next.inscribed.hi() >= next.circumscribed.lo())
        throw PrecisionExhausted("polygon enclosures no longer separated at n = " +
                                 std::to_string(next.sides) + "; retry with more precision bits");
    return next;
}

Interval pi_enclosure(int doublings, int precision_bits) {
    if (doublings < 0) throw std::invalid_argument("doublings must be >= 0");
    PolygonPair s = hexagon_init(precision_bits);
    for (int k = 0; k < doublings; ++k) s = double_step(s);
    return Interval(s.inscribed.lo(), s.circumscribed.hi(), precision_bits);
}

std::vector<ConvergenceRow> convergence_report(int max_doublings, int precision_bits) {
    if (max_doublings < 1) throw std::invalid_argument("max_doublings must be >= 1");
    std::vector<ConvergenceRow> rows;
    rows.reserve(static_cast<size_t>(max_doublings) + 1);
    PolygonPair s = hexagon_init(precision_bits);
    for (int k = 0; ; ++k) {
        ConvergenceRow row;
        row.doublings = k;
        row.sides = s.sides;
        row.lower = s.inscribed.lo();
        row.upper = s.circumscribed.hi();
        row.width = row.upper - row.lower;
        if (!rows.empty()) row.width_ratio = rows.back().width / row.width;
        rows.push_back(std::move(row));
        if (k == max_doublings) break;
        s = double_step(s);
    }
    return rows;
}

}  // namespace archimedes
