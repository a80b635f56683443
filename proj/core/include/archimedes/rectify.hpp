#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "archimedes/interval.hpp"

namespace archimedes {

// Catalog of rectifiable plane curves. Parametrizations are chosen so that
// sample points are exact rationals wherever possible:
//   segment      straight line between two rational points; domain [0, 1]
//   circle       half unit circle via the tangent half-angle substitution,
//                scaled by r; domain t in [-1, 1]; length pi*r
//   cycloid      x = r(t - sin t), y = r(1 - cos t); domain [0, 2*pi]
//   semicubical  a*y^2 = x^3 as (a s^2, a s^3); domain s in [0, 1]
//   log_spiral   r = a e^theta; domain theta in [-T, 0]
//   archimedean_spiral  r = h theta; domain [0, 2*pi]
//   quadratrix   x = y cot(pi y / (2a)) parametrized by height y
enum class CurveKind { Segment, Circle, Cycloid, Semicubical, LogSpiral, ArchimedeanSpiral, Quadratrix };

struct CurveSpec {
    CurveKind kind;
    std::map<std::string, Rational> params;
    Interval domain;
};

struct RationalPoint {
    Rational x;
    Rational y;
};
CurveSpec make_segment(const RationalPoint& from, const RationalPoint& to,
                       int precision_bits = kDefaultPrecisionBits);
CurveSpec make_circle(const Rational& r, int precision_bits = kDefaultPrecisionBits);
CurveSpec make_cycloid(const Rational& r, int precision_bits = kDefaultPrecisionBits);
CurveSpec make_semicubical(const Rational& a, int precision_bits = kDefaultPrecisionBits);
CurveSpec make_log_spiral(const Rational& a, const Rational& truncation,
                          int precision_bits = kDefaultPrecisionBits);
CurveSpec make_archimedean_spiral(const Rational& h, int precision_bits = kDefaultPrecisionBits);
CurveSpec make_quadratrix(const Rational& a, int precision_bits = kDefaultPrecisionBits);

CurveKind curve_kind_from_name(const std::string& name);
std::string curve_kind_name(CurveKind kind);

// Enclosed coordinates of the curve point at parameter t.
struct PlanePoint {
    Interval x;
    Interval y;
};
PlanePoint curve_point(const CurveSpec& curve, const Rational& t,
                       int precision_bits = kDefaultPrecisionBits);

// Inscribed-polyline arc length: the lower endpoint is the length enclosure
// of the 2m-segment inscribed polyline (a true lower bound for the arc),
// the upper endpoint adds twice the m -> 2m refinement difference.
Interval inscribed_length(const CurveSpec& curve, std::int64_t segments,
                          int precision_bits = kDefaultPrecisionBits);

// Doubles the segment count until the enclosure width drops below
// `target_width`. Throws NonConvergent after `max_doublings` refinements.
struct RefinedLength {
    Interval enclosure;
    std::int64_t segments;
};
RefinedLength refine_length(const CurveSpec& curve, const Rational& target_width,
                            int precision_bits = kDefaultPrecisionBits, int max_doublings = 24);

// Closed-form lengths: 8r for the cycloid arch, a(13*sqrt(13)-8)/27 for the
// semicubical parabola from (0,0) to (a,a), a*sqrt(2) for the full log
// spiral tail theta <= 0. Throws NoClosedForm for the other kinds.
Interval analytic_length(const CurveSpec& curve, int precision_bits = kDefaultPrecisionBits);

struct RectifyResult {
    Interval analytic;
    Interval oracle;
    bool agree = false;
    std::map<std::string, Interval> detail;
};

// On Spirals 18: the polar subtangent of r = h*theta at the end of the
// first turn equals the circumference of the first circle. The analytic
// side is 4*pi^2*h from the pi enclosure; the oracle side rebuilds the
// tangent from a certified central difference and intersects it with the
// perpendicular ray at the pole.
RectifyResult spiral_subtangent(const Rational& h, int pi_doublings,
                                int precision_bits = kDefaultPrecisionBits);

// Quadratrix base point: CD = 2a/pi from the pi enclosure, and
// independently as the limit of x(y) for y = a/2^j evaluated through the
// square polygon family (cot(pi/2^(j+1)) = 2^(j+1) / circumscribed
// semiperimeter). Also certifies that CG/CD encloses pi/2.
RectifyResult quadratrix_base(const Rational& a, int pi_doublings,
                              int precision_bits = kDefaultPrecisionBits);

// Total length of the log spiral r = a e^theta over theta <= 0: inscribed
// polyline over [-T, 0] (summed in closed form through the spiral's
// self-similarity) plus the certified tail bound a*sqrt(2)*e^(-T).
Interval log_spiral_tail(const Rational& a, const Rational& truncation,
                         int precision_bits = kDefaultPrecisionBits);

// Sample rows for --emit-polyline.
struct PolylineRow {
    Rational t;
    Interval x;
    Interval y;
};
std::vector<PolylineRow> sample_polyline(const CurveSpec& curve, std::int64_t segments,
                                         int precision_bits = kDefaultPrecisionBits);

}  // namespace archimedes
