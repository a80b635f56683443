#pragma once

#include <utility>
#include <vector>

#include "archimedes/interval.hpp"

namespace archimedes {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// Piecewise-linear plane curve with exact rational vertices. Positions are
// always exact; only lengths, which may be irrational, live in intervals.
struct Chain {
    std::vector<Point> vertices;

    explicit Chain(std::vector<Point> v);

    const Point& front() const { return vertices.front(); }
    const Point& back() const { return vertices.back(); }
    size_t size() const { return vertices.size(); }
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear. Exact.
int orientation(const Point& a, const Point& b, const Point& c);

// Length enclosure of a single segment.
Interval segment_length(const Point& a, const Point& b, int precision_bits = kDefaultPrecisionBits);

// Sum of edge-length enclosures (finite additivity is the definition of
// chain length here).
Interval chain_length(const Chain& chain, int precision_bits = kDefaultPrecisionBits);

// True iff every segment connecting two points of the chain falls on one
// fixed side of it or on it. For a polyline this reduces to: all vertices
// lie on the convex hull of the vertex set, visited in boundary order.
bool is_concave_same_direction(const Chain& chain);

// True iff the region bounded by `inner` and the common chord is contained
// in the region bounded by `outer` and the chord. Shared boundary points are
// allowed. Throws EndpointMismatch / NotConcave when preconditions fail.
bool chain_between(const Chain& inner, const Chain& outer);

enum class ChainOrdering { InnerShorter, Overlapping };

// Certified length comparison of a nested pair: InnerShorter only under
// strict interval separation, Overlapping when the enclosures are too wide
// to decide (callers raise precision).
ChainOrdering compare_chains(const Chain& inner, const Chain& outer,
                             int precision_bits = kDefaultPrecisionBits);

// Euclid I.20 / I.21 for a point H strictly inside triangle EFG: certifies
// EF < EH+FH and EH+FH < EG+FG. Throws PointNotInterior otherwise.
std::pair<bool, bool> euclid_triangle_checks(const Point& e, const Point& f, const Point& g,
                                             const Point& h,
                                             int precision_bits = kDefaultPrecisionBits);

// Certified bounds for a circular sector with half-angle theta at the
// center of a unit circle: chord = 2 sin(theta), arc = 2 theta,
// tangent = 2 tan(theta), with chord < arc < tangent strictly separated.
struct SectorBounds {
    Interval theta;
    Interval chord;
    Interval arc;
    Interval tangent;
};

}  // namespace archimedes
