#pragma once

// Deterministic random-case generators shared by the property tests and the
// acceptance suite. Chains are built from Pythagorean edge vectors so every
// edge length is an exact rational and orderings can be cross-checked by
// exact arithmetic.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "archimedes/chains.hpp"
#include "archimedes/interval.hpp"
#include "oracle.hpp"

namespace testutil {

using archimedes::Chain;
using archimedes::Interval;
using archimedes::Point;
using archimedes::Rational;

using Rng = std::mt19937_64;

inline Interval to_interval(const oracle::Bracket& b) {
    return Interval(b.lo, b.hi);
}

// A truncated decimal literal pins the true value to [v, v + 10^-digits).
inline Interval frozen(const std::string& truncated_decimal) {
    const Rational v = Rational::from_string(truncated_decimal);
    const auto dot = truncated_decimal.find('.');
    const long digits =
        dot == std::string::npos ? 0 : static_cast<long>(truncated_decimal.size() - dot - 1);
    Rational ulp(1);
    for (long i = 0; i < digits; ++i) ulp = ulp / Rational(10);
    return Interval(v, v + ulp);
}

// Both arguments are certified to contain the same true value, so they must
// intersect; used for enclosure-vs-oracle agreement.
inline bool consistent(const Interval& a, const Interval& b) {
    return a.intersects(b);
}

inline bool consistent(const Interval& a, const oracle::Bracket& b) {
    return a.intersects(to_interval(b));
}

// (dx, dy, hypotenuse) with dx > 0; slopes are pairwise distinct.
struct PythagoreanVector {
    long dx;
    long dy;
    long length;
};

inline const std::vector<PythagoreanVector>& vector_pool() {
    static const std::vector<PythagoreanVector> pool = {
        {3, 4, 5},    {4, 3, 5},    {5, 12, 13},  {12, 5, 13},  {8, 15, 17},  {15, 8, 17},
        {7, 24, 25},  {24, 7, 25},  {20, 21, 29}, {21, 20, 29}, {9, 40, 41},  {40, 9, 41},
        {12, 35, 37}, {35, 12, 37}, {28, 45, 53}, {45, 28, 53}, {11, 60, 61}, {60, 11, 61},
        {16, 63, 65}, {63, 16, 65}, {33, 56, 65}, {56, 33, 65}, {48, 55, 73}, {55, 48, 73},
        {13, 84, 85}, {84, 13, 85}, {36, 77, 85}, {77, 36, 85}, {39, 80, 89}, {80, 39, 89},
        {65, 72, 97}, {72, 65, 97},
    };
    return pool;
}

struct RationalChain {
    Chain chain;
    Rational exact_length;  // every edge has rational length
};

// Strictly convex arch: distinct pool vectors (random signs on dy, random
// integer scales) sorted by slope in decreasing order and accumulated from a
// random anchor. All turns share one sign, so the chain is concave in the
// same direction and has at least one vertex off its chord.
inline RationalChain random_arch(Rng& rng, int min_edges = 2, int max_edges = 8) {
    std::uniform_int_distribution<int> edge_count(min_edges, max_edges);
    std::uniform_int_distribution<long> scale_dist(1, 6);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::uniform_int_distribution<long> anchor_dist(-50, 50);

    const auto& pool = vector_pool();
    std::vector<size_t> indices(pool.size());
    for (size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    std::shuffle(indices.begin(), indices.end(), rng);

    const int edges = edge_count(rng);
    struct Step {
        Rational dx, dy, length;
    };
    std::vector<Step> steps;
    for (int i = 0; i < edges; ++i) {
        const PythagoreanVector& v = pool[indices[static_cast<size_t>(i)]];
        const long s = scale_dist(rng);
        const long sign = sign_dist(rng) == 0 ? 1 : -1;
        steps.push_back({Rational(v.dx * s), Rational(v.dy * s * sign), Rational(v.length * s)});
    }
    // decreasing slope ordering makes every turn a right turn
    std::sort(steps.begin(), steps.end(),
              [](const Step& a, const Step& b) { return a.dy * b.dx > b.dy * a.dx; });

    std::vector<Point> vertices;
    Point current{Rational(anchor_dist(rng)), Rational(anchor_dist(rng))};
    vertices.push_back(current);
    Rational total(0);
    for (const Step& step : steps) {
        current = {current.x + step.dx, current.y + step.dy};
        vertices.push_back(current);
        total += step.length;
    }
    return {Chain(std::move(vertices)), total};
}

inline Chain chord_of(const Chain& chain) {
    return Chain({chain.front(), chain.back()});
}

// Exact squared length of a two-point chord.
inline Rational chord_length_squared(const Chain& chain) {
    const Rational dx = chain.back().x - chain.front().x;
    const Rational dy = chain.back().y - chain.front().y;
    return dx * dx + dy * dy;
}

struct NestedPair {
    Chain inner;
    Chain outer;
    Rational inner_length;
    Rational outer_length;
};

// Symmetric convex arch over [0, 2*span] built from mirrored vector pairs,
// with the top `keep` pairs optionally replaced by a flat run: the truncated
// arch is wholly included between the full arch and the chord, sharing its
// flank edges with the outer one.
inline NestedPair nested_arch_pair(Rng& rng, int min_pairs = 2, int max_pairs = 5) {
    std::uniform_int_distribution<int> pair_count(min_pairs, max_pairs);
    std::uniform_int_distribution<long> scale_dist(1, 4);

    const auto& pool = vector_pool();
    std::vector<size_t> indices(pool.size());
    for (size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    std::shuffle(indices.begin(), indices.end(), rng);

    const int pairs = pair_count(rng);
    struct Rise {
        Rational dx, dy, length;
    };
    std::vector<Rise> rises;
    for (int i = 0; i < pairs; ++i) {
        const PythagoreanVector& v = pool[indices[static_cast<size_t>(i)]];
        const long s = scale_dist(rng);
        rises.push_back({Rational(v.dx * s), Rational(v.dy * s), Rational(v.length * s)});
    }
    // ascending flank: steepest first
    std::sort(rises.begin(), rises.end(),
              [](const Rise& a, const Rise& b) { return a.dy * b.dx > b.dy * a.dx; });

    const auto build = [&](int keep) -> std::pair<Chain, Rational> {
        std::vector<Point> vertices;
        Point current{Rational(0), Rational(0)};
        vertices.push_back(current);
        Rational total(0);
        for (int i = 0; i < keep; ++i) {
            current = {current.x + rises[static_cast<size_t>(i)].dx,
                       current.y + rises[static_cast<size_t>(i)].dy};
            vertices.push_back(current);
            total += rises[static_cast<size_t>(i)].length;
        }
        // flat filler spanning what the dropped pairs would have covered
        Rational filler(0);
        for (int i = keep; i < pairs; ++i) filler += Rational(2) * rises[static_cast<size_t>(i)].dx;
        if (filler.sign() > 0) {
            current = {current.x + filler, current.y};
            vertices.push_back(current);
            total += filler;
        }
        for (int i = keep - 1; i >= 0; --i) {
            current = {current.x + rises[static_cast<size_t>(i)].dx,
                       current.y - rises[static_cast<size_t>(i)].dy};
            vertices.push_back(current);
            total += rises[static_cast<size_t>(i)].length;
        }
        return {Chain(std::move(vertices)), total};
    };

    std::uniform_int_distribution<int> keep_dist(0, pairs - 1);
    const auto [outer, outer_len] = build(pairs);
    const auto [inner, inner_len] = build(keep_dist(rng));
    return {inner, outer, inner_len, outer_len};
}

}  // namespace testutil
