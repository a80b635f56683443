#pragma once

#include "archimedes/interval.hpp"

namespace archimedes {

// Enclosure-certified elementary functions via Taylor series with explicit
// remainder bounds. These serve the rectification oracle paths only; the
// certified polygon iteration never evaluates a transcendental function.
//
// Arguments are restricted to |x| <= 64, far beyond any curve parameter
// used here; no argument reduction is performed.

Interval sin_point(const Rational& x, int precision_bits);
Interval cos_point(const Rational& x, int precision_bits);
Interval exp_point(const Rational& x, int precision_bits);

// Interval arguments: sin/cos widen a midpoint evaluation by the radius
// (their derivatives are bounded by 1); exp uses monotone endpoint
// evaluation.
Interval sin_enclosure(const Interval& x);
Interval cos_enclosure(const Interval& x);
Interval exp_enclosure(const Interval& x);

}  // namespace archimedes
