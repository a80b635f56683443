#include "archimedes/chains.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "archimedes/errors.hpp"

namespace archimedes {

Chain::Chain(std::vector<Point> v) : vertices(std::move(v)) {
    if (vertices.size() < 2) throw std::invalid_argument("chain needs at least two vertices");
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("chain with repeated consecutive vertices");
}

int orientation(const Point& a, const Point& b, const Point& c) {
    const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

Interval segment_length(const Point& a, const Point& b, int precision_bits) {
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    return interval_sqrt(Interval(dx * dx + dy * dy, precision_bits));
}

Interval chain_length(const Chain& chain, int precision_bits) {
    Interval total(Rational(0), precision_bits);
    for (size_t i = 1; i < chain.vertices.size(); ++i)
        total = total + segment_length(chain.vertices[i - 1], chain.vertices[i], precision_bits);
    return total;
}

namespace {

Rational dot(const Point& origin, const Point& a, const Point& b) {
    return (a.x - origin.x) * (b.x - origin.x) + (a.y - origin.y) * (b.y - origin.y);
}

bool lexicographic_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Corners of the convex hull in counterclockwise order, collinear boundary
// points dropped. Requires at least two distinct, not all collinear points.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lexicographic_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<Point> hull;
    // lower then upper chain
    for (int pass = 0; pass < 2; ++pass) {
        const size_t base = hull.size();
        for (const Point& p : pts) {
            while (hull.size() >= base + 2 &&
                   orientation(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return hull;
}

// Position of p on the hull boundary as edge_index + t with t in [0,1),
// or nullopt if p is not on the boundary.
std::optional<Rational> boundary_position(const std::vector<Point>& hull, const Point& p) {
    const size_t n = hull.size();
    for (size_t j = 0; j < n; ++j) {
        const Point& a = hull[j];
        const Point& b = hull[(j + 1) % n];
        if (orientation(a, b, p) != 0) continue;
        const Rational along = dot(a, b, p);
        const Rational len2 = dot(a, b, b);
        if (along.sign() < 0 || along >= len2) continue;
        return Rational(static_cast<long>(j)) + along / len2;
    }
    return std::nullopt;
}

// Strict cyclic monotonicity with a single wrap: the chain walks the hull
// boundary in one rotational direction, never revisiting a point.
bool single_boundary_traversal(const std::vector<Rational>& positions, long cycle) {
    const Rational full(cycle);
    Rational total(0);
    for (size_t i = 1; i < positions.size(); ++i) {
        Rational step = positions[i] - positions[i - 1];
        if (step.sign() < 0) step += full;
        if (step.sign() == 0) return false;
        total += step;
    }
    return total < full;
}

bool collinear_chain(const std::vector<Point>& v) {
    for (size_t i = 2; i < v.size(); ++i)
        if (orientation(v[0], v[1], v[i]) != 0) return false;
    return true;
}

// A collinear chain is concave in the same direction exactly when it makes
// steady progress along its carrier line (no backtracking).
bool monotone_along_line(const std::vector<Point>& v) {
    const Point dir{v.back().x - v.front().x, v.back().y - v.front().y};
    if (dir.x.sign() == 0 && dir.y.sign() == 0) return false;
    for (size_t i = 1; i < v.size(); ++i) {
        const Rational advance =
            (v[i].x - v[i - 1].x) * dir.x + (v[i].y - v[i - 1].y) * dir.y;
        if (advance.sign() <= 0) return false;
    }
    return true;
}

}  // namespace

bool is_concave_same_direction(const Chain& chain) {
    std::vector<Point> v = chain.vertices;
    const bool closed = v.front() == v.back();
    if (closed) v.pop_back();
    if (v.size() <= 2) return true;

    if (collinear_chain(v)) return !closed && monotone_along_line(v);

    const std::vector<Point> hull = convex_hull(v);
    std::vector<Rational> forward;
    forward.reserve(v.size());
    for (const Point& p : v) {
        const auto pos = boundary_position(hull, p);
        if (!pos) return false;
        forward.push_back(*pos);
    }
    const long cycle = static_cast<long>(hull.size());
    if (single_boundary_traversal(forward, cycle)) return true;
    std::vector<Rational> backward(forward.rbegin(), forward.rend());
    return single_boundary_traversal(backward, cycle);
}

namespace {

Rational twice_signed_area(const std::vector<Point>& poly) {
    Rational area(0);
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        area += a.x * b.y - b.x * a.y;
    }
    return area;
}

// Inside-or-on test against a convex polygon given in counterclockwise
// order; collinear consecutive vertices are tolerated.
bool inside_convex(const std::vector<Point>& poly, const Point& p) {
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if (a == b) continue;
        if (orientation(a, b, p) < 0) return false;
    }
    return true;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    const Rational along = dot(a, b, p);
    return along.sign() >= 0 && along <= dot(a, b, b);
}

}  // namespace

bool chain_between(const Chain& inner, const Chain& outer) {
    if (!(inner.front() == outer.front()) || !(inner.back() == outer.back()))
        throw EndpointMismatch("inner and outer chains must share endpoints");
    if (!is_concave_same_direction(inner) || !is_concave_same_direction(outer))
        throw NotConcave("both chains must be concave in the same direction");

    // Degenerate outer region (outer chain on the chord line): containment
    // requires every inner vertex on the chord segment between the shared
    // endpoints.
    std::vector<Point> outer_poly = outer.vertices;
    if (outer_poly.front() == outer_poly.back()) outer_poly.pop_back();
    const Rational outer_area2 = twice_signed_area(outer_poly);
    if (outer_area2.sign() == 0) {
        for (const Point& p : inner.vertices)
            if (!on_segment(outer.front(), outer.back(), p)) return false;
        return true;
    }
    if (outer_area2.sign() < 0) std::reverse(outer_poly.begin(), outer_poly.end());

    for (const Point& p : inner.vertices)
        if (!inside_convex(outer_poly, p)) return false;
    return true;
}

ChainOrdering compare_chains(const Chain& inner, const Chain& outer, int precision_bits) {
    if (!chain_between(inner, outer))
        throw std::invalid_argument("compare_chains requires chain_between(inner, outer)");
    const Interval inner_len = chain_length(inner, precision_bits);
    const Interval outer_len = chain_length(outer, precision_bits);
    return certainly_less(inner_len, outer_len) ? ChainOrdering::InnerShorter
                                                : ChainOrdering::Overlapping;
}

std::pair<bool, bool> euclid_triangle_checks(const Point& e, const Point& f, const Point& g,
                                             const Point& h, int precision_bits) {
    const int whole = orientation(e, f, g);
    if (whole == 0) throw PointNotInterior("degenerate triangle");
    if (orientation(e, f, h) != whole || orientation(f, g, h) != whole ||
        orientation(g, e, h) != whole)
        throw PointNotInterior("point is not strictly inside the triangle");

    for (int bits = precision_bits;; bits *= 2) {
        const Interval ef = segment_length(e, f, bits);
        const Interval inner_sum = segment_length(e, h, bits) + segment_length(f, h, bits);
        const Interval outer_sum = segment_length(e, g, bits) + segment_length(f, g, bits);
        const auto first = interval_compare(ef, inner_sum);
        const auto second = interval_compare(inner_sum, outer_sum);
        if (first != IntervalOrder::Overlapping && second != IntervalOrder::Overlapping)
            return {first == IntervalOrder::CertainlyLess, second == IntervalOrder::CertainlyLess};
        if (bits >= 4096)
            return {first == IntervalOrder::CertainlyLess, second == IntervalOrder::CertainlyLess};
    }
}

}  // namespace archimedes
