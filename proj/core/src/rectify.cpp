#include "archimedes/rectify.hpp"

#include <algorithm>
#include <stdexcept>

#include "archimedes/errors.hpp"
#include "archimedes/polygon.hpp"
#include "archimedes/series.hpp"

namespace archimedes {

namespace {

const Rational& param(const CurveSpec& curve, const std::string& name) {
    const auto it = curve.params.find(name);
    if (it == curve.params.end())
        throw std::invalid_argument("curve is missing parameter " + name);
    return it->second;
}

void require_positive(const Rational& value, const std::string& name) {
    if (value.sign() <= 0) throw std::invalid_argument(name + " must be positive");
}

Interval interval_abs(const Interval& x) {
    if (x.lo().sign() >= 0) return x;
    if (x.hi().sign() <= 0) return -x;
    return Interval(Rational(0), max(-x.lo(), x.hi()), x.precision_bits());
}

Rational magnitude_bound(const Interval& x) {
    return max(x.lo().abs(), x.hi().abs());
}

}  // namespace

CurveSpec make_segment(const RationalPoint& from, const RationalPoint& to, int precision_bits) {
    if (from.x == to.x && from.y == to.y)
        throw std::invalid_argument("segment endpoints must differ");
    return {CurveKind::Segment,
            {{"x0", from.x}, {"y0", from.y}, {"x1", to.x}, {"y1", to.y}},
            Interval(Rational(0), Rational(1), precision_bits)};
}

CurveSpec make_circle(const Rational& r, int precision_bits) {
    require_positive(r, "radius");
    return {CurveKind::Circle, {{"r", r}}, Interval(Rational(-1), Rational(1), precision_bits)};
}

CurveSpec make_cycloid(const Rational& r, int precision_bits) {
    require_positive(r, "radius");
    // Full arch: the parameter stops a hair short of the cusp at 2*pi. The
    // missing sliver has length r*w^2/2 where w is the width of the pi
    // enclosure, negligible against every refinement margin, and keeps the
    // inscribed polyline strictly below 8r.
    const Rational two_pi_lo = pi_enclosure(20, std::max(precision_bits, 64)).lo() * Rational(2);
    return {CurveKind::Cycloid, {{"r", r}}, Interval(Rational(0), two_pi_lo, precision_bits)};
}

CurveSpec make_semicubical(const Rational& a, int precision_bits) {
    require_positive(a, "scale");
    return {CurveKind::Semicubical, {{"a", a}}, Interval(Rational(0), Rational(1), precision_bits)};
}

CurveSpec make_log_spiral(const Rational& a, const Rational& truncation, int precision_bits) {
    require_positive(a, "scale");
    if (truncation.sign() < 0) throw std::invalid_argument("truncation must be nonnegative");
    return {CurveKind::LogSpiral, {{"a", a}, {"T", truncation}},
            Interval(-truncation, Rational(0), precision_bits)};
}

CurveSpec make_archimedean_spiral(const Rational& h, int precision_bits) {
    require_positive(h, "pitch");
    const Rational two_pi_hi = pi_enclosure(10, std::max(precision_bits, 64)).hi() * Rational(2);
    return {CurveKind::ArchimedeanSpiral, {{"h", h}},
            Interval(Rational(0), two_pi_hi, precision_bits)};
}

CurveSpec make_quadratrix(const Rational& a, int precision_bits) {
    require_positive(a, "side");
    return {CurveKind::Quadratrix, {{"a", a}},
            Interval(a / pow2(20), a, precision_bits)};
}

CurveKind curve_kind_from_name(const std::string& name) {
    if (name == "segment") return CurveKind::Segment;
    if (name == "circle") return CurveKind::Circle;
    if (name == "cycloid") return CurveKind::Cycloid;
    if (name == "semicubical") return CurveKind::Semicubical;
    if (name == "log_spiral") return CurveKind::LogSpiral;
    if (name == "archimedean_spiral") return CurveKind::ArchimedeanSpiral;
    if (name == "quadratrix") return CurveKind::Quadratrix;
    throw std::invalid_argument("unknown curve kind: " + name);
}

std::string curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::Segment: return "segment";
        case CurveKind::Circle: return "circle";
        case CurveKind::Cycloid: return "cycloid";
        case CurveKind::Semicubical: return "semicubical";
        case CurveKind::LogSpiral: return "log_spiral";
        case CurveKind::ArchimedeanSpiral: return "archimedean_spiral";
        case CurveKind::Quadratrix: return "quadratrix";
    }
    throw std::logic_error("unknown CurveKind");
}

PlanePoint curve_point(const CurveSpec& curve, const Rational& t, int precision_bits) {
    const int bits = precision_bits;
    switch (curve.kind) {
        case CurveKind::Segment: {
            const Rational x0 = param(curve, "x0"), y0 = param(curve, "y0");
            return {Interval(x0 + (param(curve, "x1") - x0) * t, bits),
                    Interval(y0 + (param(curve, "y1") - y0) * t, bits)};
        }
        case CurveKind::Circle: {
            const Rational& r = param(curve, "r");
            const Rational denom = Rational(1) + t * t;
            return {Interval(r * (Rational(1) - t * t) / denom, bits),
                    Interval(r * (Rational(2) * t) / denom, bits)};
        }
        case CurveKind::Cycloid: {
            const Rational& r = param(curve, "r");
            const Interval rr(r, bits);
            const Interval tt(t, bits);
            return {rr * (tt - sin_point(t, bits)),
                    rr * (Interval(Rational(1), bits) - cos_point(t, bits))};
        }
        case CurveKind::Semicubical: {
            const Rational& a = param(curve, "a");
            return {Interval(a * t * t, bits), Interval(a * t * t * t, bits)};
        }
        case CurveKind::LogSpiral: {
            const Rational& a = param(curve, "a");
            const Interval radius = Interval(a, bits) * exp_point(t, bits);
            return {radius * cos_point(t, bits), radius * sin_point(t, bits)};
        }
        case CurveKind::ArchimedeanSpiral: {
            const Rational& h = param(curve, "h");
            const Interval radius(h * t, bits);
            return {radius * cos_point(t, bits), radius * sin_point(t, bits)};
        }
        case CurveKind::Quadratrix: {
            const Rational& a = param(curve, "a");
            if (t.sign() <= 0 || t > a)
                throw std::invalid_argument("quadratrix height outside (0, a]");
            // angle = pi * t / (2a), x = t * cos/sin
            const Interval angle =
                scale(pi_enclosure(12, std::max(bits, 64)), t / (Rational(2) * a)).with_precision(bits);
            const Interval sine = sin_enclosure(angle);
            const Interval cosine = cos_enclosure(angle);
            return {Interval(t, bits) * cosine / sine, Interval(t, bits)};
        }
    }
    throw std::logic_error("unknown CurveKind");
}

namespace {

Interval polyline_length(const CurveSpec& curve, std::int64_t segments, int bits) {
    const Rational lo = curve.domain.lo();
    const Rational span = curve.domain.hi() - curve.domain.lo();
    Interval total(Rational(0), bits);
    PlanePoint prev = curve_point(curve, lo, bits);
    for (std::int64_t i = 1; i <= segments; ++i) {
        const Rational t = lo + span * Rational(i) / Rational(segments);
        const PlanePoint cur = curve_point(curve, t, bits);
        const Interval dx = cur.x - prev.x;
        const Interval dy = cur.y - prev.y;
        total = total + interval_sqrt(dx * dx + dy * dy);
        prev = cur;
    }
    return total;
}

}  // namespace

Interval inscribed_length(const CurveSpec& curve, std::int64_t segments, int precision_bits) {
    if (segments < 2) throw std::invalid_argument("need at least two segments");
    const Interval coarse = polyline_length(curve, segments, precision_bits);
    const Interval fine = polyline_length(curve, 2 * segments, precision_bits);
    const Interval diff = fine - coarse;
    const Rational margin = max(diff.hi(), Rational(0)) * Rational(2);
    return Interval(fine.lo(), fine.hi() + margin, precision_bits);
}

RefinedLength refine_length(const CurveSpec& curve, const Rational& target_width,
                            int precision_bits, int max_doublings) {
    if (target_width.sign() <= 0) throw std::invalid_argument("target width must be positive");
    std::int64_t segments = 2;
    for (int step = 0; step <= max_doublings; ++step) {
        const Interval enclosure = inscribed_length(curve, segments, precision_bits);
        if (enclosure.width() < target_width) return {enclosure, 2 * segments};
        segments *= 2;
    }
    throw NonConvergent("polyline refinement missed the target width after " +
                        std::to_string(max_doublings) + " doublings");
}

Interval analytic_length(const CurveSpec& curve, int precision_bits) {
    switch (curve.kind) {
        case CurveKind::Segment: {
            const Rational dx = param(curve, "x1") - param(curve, "x0");
            const Rational dy = param(curve, "y1") - param(curve, "y0");
            return interval_sqrt(Interval(dx * dx + dy * dy, precision_bits));
        }
        case CurveKind::Cycloid:
            return Interval(Rational(8) * param(curve, "r"), precision_bits);
        case CurveKind::Semicubical: {
            const Interval sqrt13 = interval_sqrt(Interval(Rational(13), precision_bits));
            const Interval raw =
                (Interval(Rational(13), precision_bits) * sqrt13 - Interval(Rational(8), precision_bits)) /
                Interval(Rational(27), precision_bits);
            return scale(raw, param(curve, "a"));
        }
        case CurveKind::LogSpiral:
            return scale(interval_sqrt(Interval(Rational(2), precision_bits)), param(curve, "a"));
        default:
            throw NoClosedForm("no closed-form length for " + curve_kind_name(curve.kind));
    }
}

RectifyResult spiral_subtangent(const Rational& h, int pi_doublings, int precision_bits) {
    require_positive(h, "pitch");
    const int bits = precision_bits;

    const Interval pi_ref = pi_enclosure(pi_doublings, bits);
    const Interval four_pi_sq = scale(pi_ref * pi_ref, Rational(4));
    const Interval formula = scale(four_pi_sq, h);
    // 2*pi * r(2*pi) with r(theta) = h*theta
    const Interval circumference = scale(scale(pi_ref, Rational(2)) * scale(pi_ref, Rational(2)), h);

    // Numeric route: tangent direction at theta = 2*pi from a central
    // difference with a third-derivative correction, intersected with the
    // perpendicular at the pole (the y-axis; the initial ray is +x).
    const Interval pi_fine = pi_enclosure(pi_doublings + 8, bits);
    const Interval theta = scale(pi_fine, Rational(2));
    // Step size balancing the two error sources: the enclosure noise of the
    // point evaluations divides by eps, the truncation term grows as eps^2.
    const Rational eps = pow2(-13);
    const Interval spread(-eps, eps, bits);
    const Interval hh(h, bits);

    const auto point_at = [&](const Interval& angle) -> PlanePoint {
        const Interval radius = hh * angle;
        return {radius * cos_enclosure(angle), radius * sin_enclosure(angle)};
    };

    const PlanePoint plus = point_at(theta + Interval(eps, bits));
    const PlanePoint minus = point_at(theta - Interval(eps, bits));
    const Interval two_eps(Rational(2) * eps, bits);
    Interval dir_x = (plus.x - minus.x) / two_eps;
    Interval dir_y = (plus.y - minus.y) / two_eps;

    // Third derivatives of (h t cos t, h t sin t) over theta +- eps:
    // x''' = h(-3 cos t + t sin t), y''' = h(-3 sin t - t cos t).
    const Interval window = theta + spread;
    const Interval sin_w = sin_enclosure(window);
    const Interval cos_w = cos_enclosure(window);
    const Interval three(Rational(3), bits);
    const Rational m3x = magnitude_bound(hh * (window * sin_w - three * cos_w));
    const Rational m3y = magnitude_bound(hh * (-(three * sin_w) - window * cos_w));
    const Rational correction_scale = eps * eps / Rational(6);
    dir_x = dir_x + Interval(-correction_scale * m3x, correction_scale * m3x, bits);
    dir_y = dir_y + Interval(-correction_scale * m3y, correction_scale * m3y, bits);

    if (dir_x.contains(Rational(0)))
        throw PrecisionExhausted("tangent direction enclosure contains a vertical line");

    const PlanePoint anchor = point_at(theta);
    const Interval cross_param = -(anchor.x / dir_x);
    const Interval numeric = interval_abs(anchor.y + cross_param * dir_y);

    RectifyResult result;
    result.analytic = formula;
    result.oracle = numeric;
    result.agree = formula.intersects(numeric) && formula.intersects(circumference) &&
                   numeric.intersects(circumference);
    result.detail = {{"subtangent_formula", formula},
                     {"subtangent_numeric", numeric},
                     {"first_circle_circumference", circumference}};
    return result;
}

RectifyResult quadratrix_base(const Rational& a, int pi_doublings, int precision_bits) {
    require_positive(a, "side");
    const int bits = precision_bits;
    const Rational two_a = Rational(2) * a;

    const Interval pi_ref = pi_enclosure(pi_doublings, bits);
    const Interval formula = Interval(two_a, bits) / pi_ref;

    // Numeric route: x(a/2^j) = 2a / P where P is the circumscribed
    // semiperimeter of the 2^(j+1)-gon. The square-family iterates give
    // these angles exactly; x increases monotonically toward CD and the
    // inscribed semiperimeter provides the matching upper bracket.
    constexpr int kFirst = 4, kLast = 20;
    PolygonPair gon = square_init(bits);
    while (gon.sides < (std::int64_t{1} << (kFirst + 1))) gon = double_step(gon);

    Interval previous_sample(Rational(0), bits);
    for (int j = kFirst; j <= kLast; ++j) {
        const Interval sample = Interval(two_a, bits) / gon.circumscribed;
        if (j > kFirst && sample.hi() <= previous_sample.lo())
            throw PrecisionExhausted("quadratrix samples lost certified monotonicity");
        previous_sample = sample;
        if (j < kLast) gon = double_step(gon);
    }
    const Interval upper_bracket = Interval(two_a, bits) / gon.inscribed;
    const Interval numeric(previous_sample.lo(), upper_bracket.hi(), bits);

    const Interval base = formula.intersects(numeric) ? interval_meet(formula, numeric) : formula;
    const Interval ratio = Interval(a, bits) / base;  // CG / CD

    RectifyResult result;
    result.analytic = formula;
    result.oracle = numeric;
    result.agree = formula.intersects(numeric);
    result.detail = {{"base_CD", base}, {"side_CG", Interval(a, bits)}, {"ratio_CG_over_CD", ratio}};
    return result;
}

Interval log_spiral_tail(const Rational& a, const Rational& truncation, int precision_bits) {
    require_positive(a, "scale");
    if (truncation.sign() < 0) throw std::invalid_argument("truncation must be nonnegative");
    const int bits = precision_bits;
    const Interval sqrt2 = interval_sqrt(Interval(Rational(2), bits));
    const Interval tail_bound =
        Interval(Rational(0), scale(sqrt2 * exp_point(-truncation, bits), a).hi(), bits);

    if (truncation.sign() == 0) return tail_bound;

    const Interval one(Rational(1), bits);
    const Interval aa(a, bits);
    const Interval decay_total = exp_point(-truncation, bits);

    // Successive polyline edges shrink by the exact factor e^(-delta); the
    // whole inscribed length collapses to one geometric sum.
    const auto polyline_sum = [&](std::int64_t segments) -> Interval {
        const Rational delta = truncation / Rational(segments);
        const Interval decay = exp_point(-delta, bits);
        const Interval chord_sq =
            one - scale(decay * cos_point(delta, bits), Rational(2)) + decay * decay;
        const Interval first_edge = aa * interval_sqrt(chord_sq);
        return first_edge * (one - decay_total) / (one - decay);
    };

    // The refinement difference only bounds the error once the polyline is
    // in its quadratic regime, so each level stands on its own; the loop
    // returns the first level that is tight enough.
    std::int64_t segments = 2;
    Interval result(Rational(0), scale(sqrt2, a).hi(), bits);
    for (int step = 0; step <= 24; ++step) {
        const Interval coarse = polyline_sum(segments);
        const Interval fine = polyline_sum(2 * segments);
        const Interval diff = fine - coarse;
        const Rational margin = max(diff.hi(), Rational(0)) * Rational(2);
        result = Interval(fine.lo(), fine.hi() + margin, bits) + tail_bound;
        if (result.width() < pow2(-34)) break;
        segments *= 2;
    }
    return result;
}

std::vector<PolylineRow> sample_polyline(const CurveSpec& curve, std::int64_t segments,
                                         int precision_bits) {
    if (segments < 1) throw std::invalid_argument("need at least one segment");
    std::vector<PolylineRow> rows;
    rows.reserve(static_cast<size_t>(segments) + 1);
    const Rational lo = curve.domain.lo();
    const Rational span = curve.domain.hi() - curve.domain.lo();
    for (std::int64_t i = 0; i <= segments; ++i) {
        const Rational t = lo + span * Rational(i) / Rational(segments);
        const PlanePoint p = curve_point(curve, t, precision_bits);
        rows.push_back({t, p.x, p.y});
    }
    return rows;
}

}  // namespace archimedes
